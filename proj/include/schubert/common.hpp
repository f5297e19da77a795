#pragma once

#include <cctype>
#include <cstddef>
#include <stdexcept>
#include <string>

#include <gmpxx.h>

namespace schubert {

// Exact arbitrary-precision integer coefficients.
using Int = mpz_class;

inline std::string to_string(const Int& v) { return v.get_str(); }

// Thrown by the text parsers; pos is a 0-based offset into the input.
class ParseError : public std::runtime_error {
public:
    ParseError(const std::string& what, std::size_t pos)
        : std::runtime_error(what + " at position " + std::to_string(pos)), pos_(pos) {}

    std::size_t position() const noexcept { return pos_; }

private:
    std::size_t pos_;
};

namespace detail {

inline void skip_ws(const std::string& s, std::size_t& p) {
    while (p < s.size() && std::isspace(static_cast<unsigned char>(s[p]))) ++p;
}

inline std::string parse_digits(const std::string& s, std::size_t& p, const char* what) {
    std::size_t start = p;
    while (p < s.size() && std::isdigit(static_cast<unsigned char>(s[p]))) ++p;
    if (p == start) throw ParseError(std::string("expected ") + what, start);
    return s.substr(start, p - start);
}

} // namespace detail

} // namespace schubert
