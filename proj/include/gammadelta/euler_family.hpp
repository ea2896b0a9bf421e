#pragma once

// The Euler-constant approximant families. Each member provides a pair of
// polynomials (F1, F2) with F1(x) + F2(x)*(gamma + ln x) -> 0, so the value
// -F1(x)/F2(x) approximates gamma + ln x. Four constructions live here:
//
//   laguerre1_typeI  — the base family with denominator sum C(n,k)^2 x^k/k!
//   euler_mixed      — the differential-step image of the base family,
//                      denominator sum C(n,k)^2 C(n+k,k) x^k/k!
//   euler_p_family   — p-fold differential step; p=1 is euler_mixed and
//                      p=0 is laguerre1_typeI (exact reduction identities)
//   pilehrood_baseline — the scalar comparison sequence (P_n, Q_n)
//
// Numerators are stored so that the approximant is always
// -numerator/denominator; the Pilehrood numerator is negated accordingly.

#include <stdexcept>
#include <string>
#include <utility>
#include <vector>

#include "combinatorics.hpp"
#include "log_linear_form.hpp"
#include "polynomial.hpp"
#include "rational.hpp"

namespace gammadelta {

enum class FamilyKind { laguerre1, euler, euler_p, pilehrood, gompertz };

/// Family selector: `param` is p for euler_p and a for pilehrood, unused
/// otherwise.
struct FamilyId {
    FamilyKind kind = FamilyKind::euler;
    long param = 0;

    std::string label() const {
        switch (kind) {
            case FamilyKind::laguerre1: return "laguerre1";
            case FamilyKind::euler: return "euler";
            case FamilyKind::euler_p: return "euler-p:" + std::to_string(param);
            case FamilyKind::pilehrood: return "pilehrood:" + std::to_string(param);
            case FamilyKind::gompertz: return "gompertz";
        }
        return "?";
    }

    bool operator==(const FamilyId& o) const { return kind == o.kind && param == o.param; }
};

/// One family member: numerator/denominator polynomials for index n.
/// Invariants: denominator degree = n with strictly positive coefficients;
/// numerator degree <= n (<= n-1 for the Gompertz family).
struct ApproximantPair {
    FamilyId family;
    long n = 0;
    Polynomial numerator;   // F1
    Polynomial denominator; // F2
};

/// View an Euler-side pair as the log-linear form F1 + F2*(gamma + ln x).
inline LogLinearForm to_log_linear(const ApproximantPair& pair) {
    return {pair.numerator, pair.denominator, ConstantTag::euler_gamma};
}

/// Base type-I family:
///   L1(x) = sum_k C(n,k)^2 (-3 H_k + 2 H_{n-k}) x^k / k!
///   L2(x) = sum_k C(n,k)^2 x^k / k!
inline ApproximantPair laguerre1_typeI(long n) {
    if (n < 0) throw std::invalid_argument("laguerre1_typeI: n must be >= 0");
    const auto h = harmonic_table(static_cast<unsigned long>(n));
    std::vector<Rational> f1(static_cast<std::size_t>(n) + 1), f2(static_cast<std::size_t>(n) + 1);
    for (long k = 0; k <= n; ++k) {
        const BigInt c = binomial(static_cast<unsigned long>(n), k);
        const Rational b = make_rational(c * c, factorial(static_cast<unsigned long>(k)));
        f2[static_cast<std::size_t>(k)] = b;
        f1[static_cast<std::size_t>(k)] =
            b * (Rational(2) * h[static_cast<std::size_t>(n - k)] -
                 Rational(3) * h[static_cast<std::size_t>(k)]);
    }
    return {{FamilyKind::laguerre1, 0}, n, Polynomial(std::move(f1)), Polynomial(std::move(f2))};
}

/// Mixed-type family by its closed-form double sum:
///   F2(x) = sum_k C(n,k)^2 C(n+k,k) x^k / k!
///   F1(x) = sum_k [ C(n,k)^2 C(n+k,k) (-3H_k + 2H_{n-k})
///                   - C(n,k)^2 / k! * sum_{l=1..n} C(n+k, n-l) (-1)^l / l ] x^k / k!
/// Must coincide exactly with rodrigues_step(laguerre1_typeI(n), n); that
/// cross-derivation identity is enforced by the verification suites.
inline ApproximantPair euler_mixed(long n) {
    if (n < 0) throw std::invalid_argument("euler_mixed: n must be >= 0");
    const auto h = harmonic_table(static_cast<unsigned long>(n));
    const BigInt lcm_n = lcm_upto(static_cast<unsigned long>(n));
    std::vector<Rational> f1(static_cast<std::size_t>(n) + 1), f2(static_cast<std::size_t>(n) + 1);
    for (long k = 0; k <= n; ++k) {
        const BigInt cnk = binomial(static_cast<unsigned long>(n), k);
        const BigInt cnkk = binomial(static_cast<unsigned long>(n + k), k);
        const Rational base = make_rational(cnk * cnk, factorial(static_cast<unsigned long>(k)));
        f2[static_cast<std::size_t>(k)] = base * Rational(cnkk);
        // Inner alternating sum over a common denominator lcm(1..n) to keep
        // the loop in integer arithmetic.
        BigInt inner_num(0);
        for (long l = 1; l <= n; ++l) {
            BigInt t = binomial(static_cast<unsigned long>(n + k), n - l) * (lcm_n / l);
            if (l % 2 == 1)
                inner_num -= t;
            else
                inner_num += t;
        }
        const Rational inner = make_rational(inner_num, lcm_n);
        f1[static_cast<std::size_t>(k)] =
            f2[static_cast<std::size_t>(k)] * (Rational(2) * h[static_cast<std::size_t>(n - k)] -
                                               Rational(3) * h[static_cast<std::size_t>(k)]) -
            base * inner;
    }
    return {{FamilyKind::euler, 0}, n, Polynomial(std::move(f1)), Polynomial(std::move(f2))};
}

/// p-fold differential-step family. The denominator is the closed form
///   F2(x) = sum_k C(n,k)^2 C(n+k,k)^p x^k / k!
/// and the numerator coefficient multiplies it by the residue bracket
///   p (H_{n+k} - H_k) - 3 H_k + 2 H_{n-k},
/// the t-derivative of the integrand's logarithm at the double pole t = k of
/// the family's contour representation. Reductions: p=1 equals euler_mixed
/// and p=0 equals laguerre1_typeI, both exactly (verification-gated).
inline ApproximantPair euler_p_family(long n, long p) {
    if (n < 0 || p < 0) throw std::invalid_argument("euler_p_family: n, p must be >= 0");
    const auto h = harmonic_table(static_cast<unsigned long>(2 * n));
    std::vector<Rational> f1(static_cast<std::size_t>(n) + 1), f2(static_cast<std::size_t>(n) + 1);
    for (long k = 0; k <= n; ++k) {
        const BigInt cnk = binomial(static_cast<unsigned long>(n), k);
        BigInt cp;
        mpz_pow_ui(cp.get_mpz_t(), binomial(static_cast<unsigned long>(n + k), k).get_mpz_t(),
                   static_cast<unsigned long>(p));
        const Rational b = make_rational(cnk * cnk * cp, factorial(static_cast<unsigned long>(k)));
        const Rational bracket =
            Rational(p) * (h[static_cast<std::size_t>(n + k)] - h[static_cast<std::size_t>(k)]) -
            Rational(3) * h[static_cast<std::size_t>(k)] +
            Rational(2) * h[static_cast<std::size_t>(n - k)];
        f2[static_cast<std::size_t>(k)] = b;
        f1[static_cast<std::size_t>(k)] = b * bracket;
    }
    return {{FamilyKind::euler_p, p}, n, Polynomial(std::move(f1)), Polynomial(std::move(f2))};
}

/// Pilehrood comparison sequence:
///   Q = sum_k C(n,k)^a k!,   P = sum_k C(n,k)^a k! (a H_{n-k} - (a-1) H_k).
/// Both are integers; gamma ~ P/Q.
inline std::pair<Rational, Rational> pilehrood_baseline(long n, long a) {
    if (n < 0 || a < 1) throw std::invalid_argument("pilehrood_baseline: need n >= 0, a >= 1");
    const auto h = harmonic_table(static_cast<unsigned long>(n));
    Rational p_sum(0), q_sum(0);
    for (long k = 0; k <= n; ++k) {
        BigInt ca;
        mpz_pow_ui(ca.get_mpz_t(), binomial(static_cast<unsigned long>(n), k).get_mpz_t(),
                   static_cast<unsigned long>(a));
        const Rational t = Rational(ca * factorial(static_cast<unsigned long>(k)));
        q_sum += t;
        p_sum += t * (Rational(a) * h[static_cast<std::size_t>(n - k)] -
                      Rational(a - 1) * h[static_cast<std::size_t>(k)]);
    }
    return {p_sum, q_sum};
}

/// Integrality report for one family member. The flags test the family's
/// canonical scalers; the minimal multiplier is the least positive integer M
/// with M * n! * numerator integral (computed from coefficient denominators,
/// so it is exact, not a probe).
struct ScalerReport {
    bool denominator_scaler_ok = false;
    bool numerator_scaler_ok = false;
    BigInt minimal_numerator_multiplier{1};
};

/// Canonical integer scalers per family: Euler-side numerators need
/// n!*lcm(1..n) and denominators n!; the Gompertz family needs n! for both;
/// Pilehrood members are already integers.
inline std::pair<BigInt, BigInt> family_scalers(const FamilyId& family, long n) {
    const BigInt f = factorial(static_cast<unsigned long>(n));
    switch (family.kind) {
        case FamilyKind::laguerre1:
        case FamilyKind::euler:
        case FamilyKind::euler_p: return {f * lcm_upto(static_cast<unsigned long>(n)), f};
        case FamilyKind::gompertz: return {f, f};
        case FamilyKind::pilehrood: return {BigInt(1), BigInt(1)};
    }
    throw std::logic_error("family_scalers: unreachable");
}

inline ScalerReport diophantine_scaler_check(const ApproximantPair& pair) {
    const auto [num_scaler, den_scaler] = family_scalers(pair.family, pair.n);
    ScalerReport r;
    r.denominator_scaler_ok = (pair.denominator * Rational(den_scaler)).is_integral();
    r.numerator_scaler_ok = (pair.numerator * Rational(num_scaler)).is_integral();
    const BigInt base = factorial(static_cast<unsigned long>(pair.n));
    r.minimal_numerator_multiplier = (pair.numerator * Rational(base)).denominator_lcm();
    return r;
}

} // namespace gammadelta
