#pragma once

#include <string>

#include "modrad/checks.hpp"

namespace modrad {
namespace report {

// Shortest round-trip decimal with 17 significant digits.
std::string format_double(double value);

// "re+imi" token, e.g. "0+2i", "-1.5+0i", "0.6-0.8i".
std::string format_complex(Complex value);

std::string escape_json(const std::string& text);

// Serializes with fixed key order: version, config, outcomes, passed.
// config is always an array of the executed trial configurations.
std::string to_json(const checks::SuiteReport& report);

// Writes to_json output (with trailing newline) to path; throws Error on
// IO failure.
void write_json(const checks::SuiteReport& report, const std::string& path);

}  // namespace report
}  // namespace modrad
