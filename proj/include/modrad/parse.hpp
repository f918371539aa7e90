#pragma once

#include <string>
#include <vector>

#include "modrad/matrix.hpp"

namespace modrad {
namespace parse {

// One complex token: "1", "-2.5", "1+2i", "0.6-0.8i", "2i", "-i".
// Throws UsageError on malformed input.
Complex parse_complex(const std::string& token);

// Comma-separated row-major entry list; must contain exactly
// rows * cols tokens.
CMatrix parse_entries(const std::string& text, std::size_t rows, std::size_t cols);

}  // namespace parse
}  // namespace modrad
