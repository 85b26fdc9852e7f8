#pragma once

#include <gmpxx.h>
#include <string>
#include <string_view>

namespace strichartz {

// Exact arbitrary-precision rational. All exponent-space arithmetic runs on
// this type; nothing in the exponent calculus ever touches floating point.
using Rational = mpq_class;

inline Rational rat(long num, long den = 1) {
    Rational q(num, den);
    q.canonicalize();
    return q;
}

inline Rational one_minus(const Rational& x) { return Rational(1) - x; }

// Canonical "p/q" form; integers print without the "/1".
inline std::string to_string(const Rational& q) { return q.get_str(); }

// Parses "p", "p/q" or "-p/q". Returns false on malformed input or zero
// denominator.
bool parse_rational(std::string_view text, Rational& out);

}  // namespace strichartz
