#pragma once

#include <stdexcept>
#include <string>

namespace modrad {

/// Base class for every error raised by the library.
class Error : public std::runtime_error {
public:
    using std::runtime_error::runtime_error;
};

class NotSquareError : public Error {
public:
    using Error::Error;
};

class ShapeMismatchError : public Error {
public:
    using Error::Error;
};

class ZeroDimensionError : public Error {
public:
    using Error::Error;
};

class NotHermitianError : public Error {
public:
    using Error::Error;
};

class NegativeEntryError : public Error {
public:
    using Error::Error;
};

class NotUnitModulusError : public Error {
public:
    using Error::Error;
};

/// Bad command-line or file input; maps to exit code 2 in the CLI.
class UsageError : public Error {
public:
    using Error::Error;
};

}  // namespace modrad
