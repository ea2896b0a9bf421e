#pragma once

// Exact scalar types: arbitrary-precision integers and rationals (GMP-backed).
// Rationals are always kept in lowest terms with a positive denominator;
// every operation on them is exact.

#include <gmpxx.h>

#include <stdexcept>
#include <string>

namespace gammadelta {

using BigInt = mpz_class;
using Rational = mpq_class;

/// Build a rational from an integer pair, canonicalized (gmpxx does not
/// canonicalize raw num/den construction on its own).
inline Rational make_rational(const BigInt& num, const BigInt& den) {
    if (sgn(den) == 0) throw std::invalid_argument("make_rational: zero denominator");
    Rational q(num, den);
    q.canonicalize();
    return q;
}

inline Rational make_rational(long num, long den = 1) {
    return make_rational(BigInt(num), BigInt(den));
}

inline std::string to_string(const BigInt& z) { return z.get_str(); }

/// Lowest-terms decimal string: "p/q", or just "p" when q = 1.
inline std::string to_string(const Rational& q) { return q.get_str(); }

/// Parse "123", "-4/7", etc. Throws std::invalid_argument on malformed input
/// or a zero denominator.
inline Rational parse_rational(const std::string& text) {
    Rational q;
    if (text.empty() || q.set_str(text, 10) != 0)
        throw std::invalid_argument("parse_rational: malformed rational '" + text + "'");
    if (sgn(q.get_den()) == 0)
        throw std::invalid_argument("parse_rational: zero denominator in '" + text + "'");
    q.canonicalize();
    return q;
}

} // namespace gammadelta
