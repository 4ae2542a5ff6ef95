#pragma once

#include <gmpxx.h>

#include <string>

#include "errors.hpp"

namespace grnorm {

// Exact scalar field: arbitrary-precision rationals in canonical form.
using Rational = mpq_class;

inline Rational rational(long num, long den = 1) {
    Rational q(num, den);
    q.canonicalize();
    return q;
}

// Accepts "p", "p/q", optional leading sign, decimal digits only.
inline Rational parse_rational(const std::string& text) {
    std::size_t i = 0;
    auto fail = [&]() -> void { throw Error("malformed rational '" + text + "'"); };
    auto digits = [&]() {
        std::size_t start = i;
        while (i < text.size() && text[i] >= '0' && text[i] <= '9') ++i;
        if (i == start) fail();
    };
    if (i < text.size() && (text[i] == '+' || text[i] == '-')) ++i;
    digits();
    std::size_t slash = i;
    if (i < text.size() && text[i] == '/') {
        ++i;
        digits();
    }
    if (i != text.size()) fail();
    std::string num = text.substr(0, slash);
    if (num[0] == '+') num.erase(0, 1);
    mpz_class den(slash < text.size() ? text.substr(slash + 1) : std::string("1"));
    if (den == 0) fail();
    Rational q(mpz_class(num), den);
    q.canonicalize();
    return q;
}

inline std::string to_string(const Rational& q) {
    return q.get_str();
}

} // namespace grnorm
