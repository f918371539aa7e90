#include "modrad/parse.hpp"

#include <cctype>
#include <cstdlib>

#include "modrad/errors.hpp"

namespace modrad {
namespace parse {

namespace {

std::string strip(const std::string& s) {
    std::size_t begin = 0;
    std::size_t end = s.size();
    while (begin < end && std::isspace(static_cast<unsigned char>(s[begin]))) ++begin;
    while (end > begin && std::isspace(static_cast<unsigned char>(s[end - 1]))) --end;
    return s.substr(begin, end - begin);
}

double parse_real(const std::string& text, const std::string& token) {
    if (text.empty()) {
        throw UsageError("malformed complex entry: '" + token + "'");
    }
    char* end = nullptr;
    const double value = std::strtod(text.c_str(), &end);
    if (end != text.c_str() + text.size()) {
        throw UsageError("malformed complex entry: '" + token + "'");
    }
    return value;
}

// Coefficient in front of 'i': empty or a bare sign means 1 or -1.
double parse_imag_coeff(const std::string& text, const std::string& token) {
    if (text.empty() || text == "+") return 1.0;
    if (text == "-") return -1.0;
    return parse_real(text, token);
}

}  // namespace

Complex parse_complex(const std::string& token) {
    const std::string body = strip(token);
    if (body.empty()) {
        throw UsageError("empty complex entry");
    }
    if (body.back() != 'i' && body.back() != 'I') {
        return Complex{parse_real(body, token), 0.0};
    }

    const std::string head = body.substr(0, body.size() - 1);
    // Split at the last '+' or '-' that is not a leading sign and not part
    // of an exponent.
    std::size_t split = std::string::npos;
    for (std::size_t pos = head.size(); pos-- > 1;) {
        const char c = head[pos];
        if (c != '+' && c != '-') continue;
        const char prev = head[pos - 1];
        if (prev == 'e' || prev == 'E') continue;
        split = pos;
        break;
    }
    if (split == std::string::npos) {
        return Complex{0.0, parse_imag_coeff(head, token)};
    }
    return Complex{parse_real(head.substr(0, split), token),
                   parse_imag_coeff(head.substr(split), token)};
}

CMatrix parse_entries(const std::string& text, std::size_t rows, std::size_t cols) {
    std::vector<Complex> entries;
    entries.reserve(rows * cols);
    std::size_t begin = 0;
    while (begin <= text.size()) {
        const std::size_t comma = text.find(',', begin);
        const std::size_t end = (comma == std::string::npos) ? text.size() : comma;
        entries.push_back(parse_complex(text.substr(begin, end - begin)));
        if (comma == std::string::npos) break;
        begin = comma + 1;
    }
    if (entries.size() != rows * cols) {
        throw UsageError("expected " + std::to_string(rows * cols) + " entries, got " +
                         std::to_string(entries.size()));
    }
    return CMatrix(rows, cols, entries);
}

}  // namespace parse
}  // namespace modrad
