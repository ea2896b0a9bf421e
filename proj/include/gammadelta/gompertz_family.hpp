#pragma once

// The Gompertz-constant family. The denominator has a closed form,
//   F2(x) = sum_l C(n,l) C(n+l,l)^2 x^l / l!,
// while the numerator is extracted exactly from the Mellin-side identity
//
//   sum_{k=0..n-1} F1[k] (s)_k  +  sum_{k=0..n} F2[k] (s)_k / (s+k)
//       = (1/n!) (1-s)_n^2 / (s)_{n+1},
//
// by Euclidean division and partial fractions over the poles s = 0..-n:
// the single-pole matches determine F2 (and must reproduce the closed form
// exactly — a built-in consistency gate), and the leftover polynomial part,
// rewritten in the rising-factorial basis, determines F1. All algebra is
// exact; the coefficient lists of F1 and F2 double as the x-coefficients of
// the approximant pair, for which -F1(x)/F2(x) -> e^x E1(x).

#include <stdexcept>
#include <utility>
#include <vector>

#include "combinatorics.hpp"
#include "euler_family.hpp"
#include "polynomial.hpp"
#include "rational.hpp"

namespace gammadelta {

/// Closed-form denominator F2.
inline Polynomial gompertz_denominator(long n) {
    if (n < 0) throw std::invalid_argument("gompertz_denominator: n must be >= 0");
    std::vector<Rational> f2(static_cast<std::size_t>(n) + 1);
    for (long l = 0; l <= n; ++l) {
        const BigInt c = binomial(static_cast<unsigned long>(n), l);
        const BigInt cc = binomial(static_cast<unsigned long>(n + l), l);
        f2[static_cast<std::size_t>(l)] =
            make_rational(c * cc * cc, factorial(static_cast<unsigned long>(l)));
    }
    return Polynomial(std::move(f2));
}

/// The rational function (1/n!) * (1-s)_n^2 / (s)_{n+1} in the variable s.
/// The denominator's root set {0, -1, ..., -n} is implied by n.
struct MellinRationalFunction {
    Polynomial numerator_s; // (1-s)_n^2, integer coefficients, degree 2n
    long n = 0;
    Rational scale{1};      // 1/n!
};

inline MellinRationalFunction mellin_rational(long n) {
    if (n < 0) throw std::invalid_argument("mellin_rational: n must be >= 0");
    Polynomial rising_one_minus_s = Polynomial::constant(Rational(1));
    for (long j = 1; j <= n; ++j) {
        // factor (j - s)
        rising_one_minus_s = rising_one_minus_s *
                             Polynomial({std::vector<Rational>{Rational(j), Rational(-1)}});
    }
    return {rising_one_minus_s * rising_one_minus_s, n,
            make_rational(BigInt(1), factorial(static_cast<unsigned long>(n)))};
}

/// Full numerator extraction. Returns the (F1, F2) pair; throws
/// std::logic_error if the recovered F2 does not match the closed form
/// (which would mean an internal algebra bug, never bad input).
inline ApproximantPair gompertz_pair(long n) {
    MellinRationalFunction mrf = mellin_rational(n);

    // (s)_{n+1}, monic, so the division below stays in integer coefficients.
    Polynomial pochhammer = Polynomial::constant(Rational(1));
    for (long j = 0; j <= n; ++j)
        pochhammer = pochhammer * Polynomial({std::vector<Rational>{Rational(j), Rational(1)}});

    auto [quot, rem] = mrf.numerator_s.divmod(pochhammer);

    // Residue at s = -k of rem/(s)_{n+1} is rem(-k) / prod_{j != k} (j - k)
    // = rem(-k) / ((-1)^k k! (n-k)!); fold in the 1/n! scale here.
    const BigInt n_fact = factorial(static_cast<unsigned long>(n));
    std::vector<Rational> f2(static_cast<std::size_t>(n) + 1);
    for (long k = 0; k <= n; ++k) {
        BigInt denom = factorial(static_cast<unsigned long>(k)) *
                       factorial(static_cast<unsigned long>(n - k)) * n_fact;
        if (k % 2 == 1) denom = -denom;
        const Rational rho = make_rational(BigInt(1), denom) * rem.eval(make_rational(-k));
        // F2[k] pairs with (s)_k/(s+k); the sign and k! convert residue to
        // coefficient: F2[k] = (-1)^k rho_k / k!.
        Rational v = rho * make_rational(BigInt(1), factorial(static_cast<unsigned long>(k)));
        if (k % 2 == 1) v = -v;
        f2[static_cast<std::size_t>(k)] = v;
    }
    Polynomial recovered_f2{std::vector<Rational>(f2)};
    if (!(recovered_f2 == gompertz_denominator(n)))
        throw std::logic_error("gompertz_pair: recovered denominator mismatches closed form at n=" +
                               std::to_string(n));

    // Polynomial part: sum F1[k] (s)_k = quot/n! - sum F2[k] * p_k(s) with
    // p_k(s) = ((s)_k - (-1)^k k!) / (s+k), a polynomial with integer
    // coefficients (p_0 = 0). Build (s)_k incrementally to keep this O(n^2).
    Polynomial rhs = quot * mrf.scale;
    Polynomial rising = Polynomial::constant(Rational(1)); // (s)_k
    for (long k = 0; k <= n; ++k) {
        if (k > 0) {
            BigInt tail = factorial(static_cast<unsigned long>(k));
            if (k % 2 == 1) tail = -tail;
            Polynomial pk = (rising - Polynomial::constant(Rational(tail))).divided_by_linear(k);
            rhs = rhs - pk * f2[static_cast<std::size_t>(k)];
        }
        rising = rising * Polynomial({std::vector<Rational>{Rational(k), Rational(1)}});
    }

    // Rising-factorial basis extraction (the triangular solve): repeatedly
    // read off a_k = rhs(-k) and divide the rest by (s + k).
    std::vector<Rational> f1;
    Polynomial cur = rhs;
    long k = 0;
    while (!cur.is_zero()) {
        const Rational a = cur.eval(make_rational(-k));
        f1.push_back(a);
        cur = (cur - Polynomial::constant(a)).divided_by_linear(k);
        ++k;
    }
    Polynomial numerator{std::move(f1)};
    if (numerator.degree() >= n && n >= 0 && !(n == 0 && numerator.is_zero()))
        if (numerator.degree() > n - 1)
            throw std::logic_error("gompertz_pair: numerator degree bound violated at n=" +
                                   std::to_string(n));

    return {{FamilyKind::gompertz, 0}, n, std::move(numerator), gompertz_denominator(n)};
}

inline Polynomial gompertz_numerator(long n) { return gompertz_pair(n).numerator; }

/// Integrality report: n! * F1 and n! * F2 must both be integer polynomials.
struct GompertzIntegrality {
    bool numerator_ok = false;
    bool denominator_ok = false;
    bool ok() const { return numerator_ok && denominator_ok; }
};

inline GompertzIntegrality gompertz_integrality_check(long n) {
    const ApproximantPair pair = gompertz_pair(n);
    const Rational scale{factorial(static_cast<unsigned long>(n))};
    return {(pair.numerator * scale).is_integral(), (pair.denominator * scale).is_integral()};
}

} // namespace gammadelta
