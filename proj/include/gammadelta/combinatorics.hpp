#pragma once

// Combinatorial building blocks shared by every family construction:
// harmonic numbers H_l, lcm(1..n), binomials, factorials. Harmonic numbers
// and lcm values are memoized incrementally (they are consumed for all
// indices up to some n_max); the memo tables sit behind a mutex so parallel
// per-index workers can share them.

#include <mutex>
#include <utility>
#include <vector>

#include "rational.hpp"

namespace gammadelta {

namespace detail {

inline std::mutex& combinatorics_mutex() {
    static std::mutex m;
    return m;
}

inline std::vector<Rational>& harmonic_cache() {
    static std::vector<Rational> cache{Rational(0)}; // H_0 = 0
    return cache;
}

inline std::vector<BigInt>& lcm_cache() {
    static std::vector<BigInt> cache{BigInt(1), BigInt(1)}; // lcm() = lcm(1) = 1
    return cache;
}

inline std::vector<BigInt>& factorial_cache() {
    static std::vector<BigInt> cache{BigInt(1)}; // 0! = 1
    return cache;
}

// Extends a cache so that index `n` is valid. Caller must hold the lock.
template <typename T, typename Step>
void extend_cache(std::vector<T>& cache, unsigned long n, Step step) {
    while (cache.size() <= n) cache.push_back(step(cache.back(), cache.size()));
}

} // namespace detail

/// H_l = sum_{j=1..l} 1/j, exactly; H_0 = 0.
inline Rational harmonic(unsigned long l) {
    std::lock_guard<std::mutex> lock(detail::combinatorics_mutex());
    detail::extend_cache(detail::harmonic_cache(), l,
                         [](const Rational& prev, unsigned long k) {
                             return Rational(prev + make_rational(1, static_cast<long>(k)));
                         });
    return detail::harmonic_cache()[l];
}

/// Snapshot of H_0..H_max as a vector, for tight loops that would otherwise
/// take the memo lock once per term.
inline std::vector<Rational> harmonic_table(unsigned long max) {
    std::lock_guard<std::mutex> lock(detail::combinatorics_mutex());
    detail::extend_cache(detail::harmonic_cache(), max,
                         [](const Rational& prev, unsigned long k) {
                             return Rational(prev + make_rational(1, static_cast<long>(k)));
                         });
    auto& cache = detail::harmonic_cache();
    return std::vector<Rational>(cache.begin(), cache.begin() + static_cast<long>(max) + 1);
}

/// lcm(1, ..., n); lcm_upto(0) = lcm_upto(1) = 1.
inline BigInt lcm_upto(unsigned long n) {
    std::lock_guard<std::mutex> lock(detail::combinatorics_mutex());
    detail::extend_cache(detail::lcm_cache(), n, [](const BigInt& prev, unsigned long k) {
        BigInt next;
        mpz_lcm_ui(next.get_mpz_t(), prev.get_mpz_t(), k);
        return next;
    });
    return detail::lcm_cache()[n];
}

/// n! with incremental memoization.
inline BigInt factorial(unsigned long n) {
    std::lock_guard<std::mutex> lock(detail::combinatorics_mutex());
    detail::extend_cache(detail::factorial_cache(), n, [](const BigInt& prev, unsigned long k) {
        return BigInt(prev * static_cast<unsigned long>(k));
    });
    return detail::factorial_cache()[n];
}

/// Binomial coefficient C(n, k); 0 when k < 0 or k > n.
inline BigInt binomial(unsigned long n, long k) {
    if (k < 0 || static_cast<unsigned long>(k) > n) return BigInt(0);
    BigInt r;
    mpz_bin_uiui(r.get_mpz_t(), n, static_cast<unsigned long>(k));
    return r;
}

} // namespace gammadelta
