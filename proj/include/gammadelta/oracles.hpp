#pragma once

// High-precision reference values ("oracles") for the constants the rational
// approximants target, plus the quality measurement of integer linear forms
// against them.
//
// Error contracts: a value returned for requested precision p carries an
// absolute error <= 2^(1-p). The Euler-constant oracle computes two
// structurally different methods and insists they agree to 2^(4-p) before
// returning anything; a failure there is a loud logic error, never a wrong
// number.
//
// Results are cached keyed by (constant, precision): convergence sweeps ask
// for the same constants thousands of times. The cache stores shared futures
// so concurrent first requests compute once.

#include <cmath>
#include <future>
#include <map>
#include <mutex>
#include <stdexcept>
#include <string>
#include <utility>

#include "big_float.hpp"
#include "combinatorics.hpp"
#include "rational.hpp"

namespace gammadelta {

/// Raised when a measurement would need more working precision than the
/// configured cap; callers surface it as a distinct failure mode.
struct PrecisionInfeasible : std::runtime_error {
    using std::runtime_error::runtime_error;
};

/// Hard ceiling for auto-raised working precision (bits).
inline constexpr long kMaxWorkingPrecision = 1L << 22;

namespace detail {

inline constexpr double kLog2E = 1.4426950408889634; // log2(e)
inline constexpr double kLn2 = 0.6931471805599453;

template <typename Fn>
BigFloat cached_big_float(const std::string& key, Fn&& fn) {
    static std::mutex m;
    static std::map<std::string, std::shared_future<BigFloat>> cache;
    std::shared_future<BigFloat> entry;
    {
        std::lock_guard<std::mutex> lock(m);
        auto it = cache.find(key);
        if (it == cache.end()) {
            entry = std::async(std::launch::deferred, std::forward<Fn>(fn)).share();
            cache.emplace(key, entry);
        } else {
            entry = it->second;
        }
    }
    return entry.get(); // first waiter runs the deferred computation
}

inline void require_feasible(long working_precision, const char* what) {
    if (working_precision > kMaxWorkingPrecision)
        throw PrecisionInfeasible(std::string(what) + ": working precision " +
                                  std::to_string(working_precision) + " exceeds cap " +
                                  std::to_string(kMaxWorkingPrecision));
}

/// Method 1: gamma = sum_{k>=1} (-1)^(k+1) x^k / (k*k!) - ln x - E1(x), with
/// integer x large enough that the dropped E1(x) <= e^-x < 2^-(p+9). The
/// alternating sum peaks near e^x, so the working precision carries a
/// cancellation guard of 64 + ceil(1.5 * x * log2(e)) bits.
inline BigFloat gamma_by_series(long p) {
    const long x = static_cast<long>(std::ceil((static_cast<double>(p) + 9.0) * kLn2)) + 1;
    const long guard = 64 + static_cast<long>(std::ceil(1.5 * static_cast<double>(x) * kLog2E));
    const long wp = p + guard;
    require_feasible(wp, "gamma_by_series");

    BigFloat sum(wp), term(wp);
    mpfr_set_ui(term.raw(), 1, MPFR_RNDN); // x^k/k! at k = 0
    BigFloat contrib(wp);
    for (long k = 1;; ++k) {
        mpfr_mul_si(term.raw(), term.raw(), x, MPFR_RNDN);
        mpfr_div_si(term.raw(), term.raw(), k, MPFR_RNDN);
        mpfr_div_si(contrib.raw(), term.raw(), k, MPFR_RNDN);
        if (k % 2 == 1)
            sum.add_assign(contrib);
        else
            sum.sub_assign(contrib);
        // Terms decrease once k > x; past 3x the ratio is < 1/3, so the tail
        // is below half the last term.
        if (k >= 3 * x && contrib.abs_within_pow2(-(p + 32))) break;
    }
    BigFloat lnx = BigFloat::ln_of_rational(make_rational(x), wp);
    return (sum - lnx).rounded_to(p + 8);
}

/// Method 2 (structurally different self-check): Brent–McMillan.
/// gamma = S(N)/B(N) - ln N + O(e^-4N) with B = sum (N^k/k!)^2 and
/// S = sum H_k (N^k/k!)^2; all terms positive, no cancellation.
inline BigFloat gamma_by_brent_mcmillan(long p) {
    const long n = static_cast<long>(std::ceil((static_cast<double>(p) + 16.0) * kLn2 / 4.0)) + 4;
    const long wp = p + 64;
    require_feasible(wp, "gamma_by_brent_mcmillan");

    BigFloat b(wp), s(wp), u(wp), h(wp), contrib(wp);
    mpfr_set_ui(u.raw(), 1, MPFR_RNDN); // (N^k/k!)^2 at k = 0
    mpfr_set_ui(b.raw(), 1, MPFR_RNDN);
    const long n_sq = n * n;
    for (long k = 1;; ++k) {
        mpfr_mul_si(u.raw(), u.raw(), n_sq, MPFR_RNDN);
        mpfr_div_si(u.raw(), u.raw(), k * k, MPFR_RNDN);
        BigFloat inv_k(wp);
        mpfr_set_si(inv_k.raw(), k, MPFR_RNDN);
        mpfr_ui_div(inv_k.raw(), 1, inv_k.raw(), MPFR_RNDN);
        h.add_assign(inv_k);
        b.add_assign(u);
        mpfr_mul(contrib.raw(), u.raw(), h.raw(), MPFR_RNDN);
        s.add_assign(contrib);
        if (k > 2 * n && !u.is_zero() && u.exponent() < b.exponent() - (p + 48)) break;
    }
    BigFloat lnn = BigFloat::ln_of_rational(make_rational(n), wp);
    return (s / b - lnn).rounded_to(p + 8);
}

} // namespace detail

/// Euler's constant at absolute error <= 2^(1-p), via the series identity,
/// with the Brent–McMillan evaluation as a mandatory independent agreement
/// check at 2^(4-p). Cached.
inline BigFloat gamma_ref(long p) {
    if (p < 64) p = 64;
    return detail::cached_big_float("gamma@" + std::to_string(p), [p]() {
        BigFloat a = detail::gamma_by_series(p);
        BigFloat b = detail::gamma_by_brent_mcmillan(p);
        if (!(a - b).abs_within_pow2(4 - p))
            throw std::logic_error("gamma oracle self-check failed: methods disagree at " +
                                   std::to_string(p) + " bits");
        return a;
    });
}

/// ln x for rational x > 0, absolute error <= 2^(1-p) for |ln x| < 2^62.
inline BigFloat ln_ref(const Rational& x, long p) {
    return BigFloat::ln_of_rational(x, p + 64);
}

/// Exponential integral E1(x) for rational x > 0 via the series
/// E1(x) = -gamma - ln x + sum_{k>=1} (-1)^(k+1) x^k/(k*k!), with the same
/// cancellation guard policy as the gamma series.
inline BigFloat e1_ref(const Rational& x, long p) {
    if (sgn(x) <= 0) throw std::invalid_argument("e1_ref: x must be positive");
    const double xd = x.get_d();
    const long guard = 64 + static_cast<long>(std::ceil(1.5 * std::max(xd, 1.0) * detail::kLog2E));
    const long wp = p + guard;
    detail::require_feasible(wp, "e1_ref");

    BigFloat sum(wp), term(wp), contrib(wp);
    mpfr_set_ui(term.raw(), 1, MPFR_RNDN);
    const long k_floor = 3 * std::max<long>(4, static_cast<long>(std::ceil(xd)));
    for (long k = 1;; ++k) {
        term.mul_rational(x);
        mpfr_div_si(term.raw(), term.raw(), k, MPFR_RNDN);
        mpfr_div_si(contrib.raw(), term.raw(), k, MPFR_RNDN);
        if (k % 2 == 1)
            sum.add_assign(contrib);
        else
            sum.sub_assign(contrib);
        if (k >= k_floor && contrib.abs_within_pow2(-(p + 32))) break;
    }
    return (sum - gamma_ref(wp) - BigFloat::ln_of_rational(x, wp)).rounded_to(p + 8);
}

enum class ConstantKind { gamma, gamma_plus_ln, exp_e1, delta };

/// Identifies one target constant: gamma, gamma + ln x, e^x E1(x), or the
/// Gompertz constant delta = e * E1(1).
struct ConstantId {
    ConstantKind kind = ConstantKind::gamma;
    Rational x = Rational(1);

    static ConstantId gamma() { return {ConstantKind::gamma, Rational(1)}; }
    static ConstantId gamma_plus_ln(const Rational& x) { return {ConstantKind::gamma_plus_ln, x}; }
    static ConstantId exp_e1(const Rational& x) { return {ConstantKind::exp_e1, x}; }
    static ConstantId delta() { return {ConstantKind::delta, Rational(1)}; }

    std::string label() const {
        switch (kind) {
            case ConstantKind::gamma: return "gamma";
            case ConstantKind::gamma_plus_ln: return "gamma+ln(" + gammadelta::to_string(x) + ")";
            case ConstantKind::exp_e1: return "exp*E1(" + gammadelta::to_string(x) + ")";
            case ConstantKind::delta: return "delta";
        }
        return "?";
    }
};

/// Reference value of a target constant, absolute error <= 2^(1-p). Cached.
inline BigFloat constant_value(const ConstantId& id, long p) {
    if (p < 64) p = 64;
    const std::string key = id.label() + "@" + std::to_string(p);
    return detail::cached_big_float(key, [id, p]() {
        switch (id.kind) {
            case ConstantKind::gamma: return gamma_ref(p);
            case ConstantKind::gamma_plus_ln: {
                if (sgn(id.x) <= 0)
                    throw std::invalid_argument("constant_value: x must be positive");
                const long wp = p + 64;
                return (gamma_ref(wp) + BigFloat::ln_of_rational(id.x, wp)).rounded_to(p + 8);
            }
            case ConstantKind::exp_e1: {
                if (sgn(id.x) <= 0)
                    throw std::invalid_argument("constant_value: x must be positive");
                const double xd = id.x.get_d();
                const long wp =
                    p + 64 + static_cast<long>(std::ceil(std::max(xd, 1.0) * detail::kLog2E));
                detail::require_feasible(wp, "constant_value(exp_e1)");
                BigFloat ex = BigFloat::from_rational(id.x, wp);
                mpfr_exp(ex.raw(), ex.raw(), MPFR_RNDN);
                return (ex * e1_ref(id.x, wp)).rounded_to(p + 8);
            }
            case ConstantKind::delta: return constant_value(ConstantId::exp_e1(Rational(1)), p);
        }
        throw std::logic_error("constant_value: unreachable");
    });
}

/// Result of measuring the linear form Q*c - P. log_error (natural log of
/// |Q*c - P|) is the authoritative magnitude — abs_error as a double may
/// overflow to inf or underflow to 0 for extreme forms. r_measured is the
/// Diophantine quality -ln|Qc - P| / ln Q, undefined when Q = 1.
struct QualityReport {
    double abs_error = 0.0;
    double log_error = 0.0;
    double r_measured = 0.0;
    bool r_defined = false;
    long precision_used = 0;
};

/// Measures |Q*c - P| with the working precision auto-raised until the
/// difference retains >= 16 significant bits over the rounding floor.
inline QualityReport linear_form_quality(const Rational& p_num, const Rational& q_den,
                                         const ConstantId& id, long precision_bits,
                                         long max_precision = kMaxWorkingPrecision) {
    if (sgn(q_den) <= 0) throw std::invalid_argument("linear_form_quality: Q must be positive");
    long wp = std::max<long>(precision_bits, 64);
    // Binary magnitude of Q bounds the error scaling |Q| * 2^(1-wp).
    const long q_mag = static_cast<long>(mpz_sizeinbase(q_den.get_num().get_mpz_t(), 2)) -
                       static_cast<long>(mpz_sizeinbase(q_den.get_den().get_mpz_t(), 2)) + 1;
    for (;;) {
        if (wp > max_precision)
            throw PrecisionInfeasible("linear_form_quality: needed precision exceeds cap at Q*c-P for " +
                                      id.label());
        BigFloat c = constant_value(id, wp);
        BigFloat d = c;
        d.mul_rational(q_den);
        d.sub_rational(p_num);
        if (!d.is_zero()) {
            const long noise_floor = q_mag + 3 - wp;
            if (d.exponent() - noise_floor >= 16) {
                QualityReport r;
                r.abs_error = std::abs(d.to_double());
                r.log_error = d.ln_abs_to_double();
                r.precision_used = wp;
                if (q_den != 1) {
                    r.r_defined = true;
                    r.r_measured = -r.log_error / BigFloat::ln_of_rational(q_den, 128).to_double();
                }
                return r;
            }
        }
        wp *= 2;
    }
}

} // namespace gammadelta
