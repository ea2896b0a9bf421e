#pragma once

// Minimal RAII wrapper over MPFR binary floats. Each value carries its own
// precision; binary operations round to the wider operand's precision with
// round-to-nearest. Only the operations the oracles need are exposed —
// this is plumbing, not a general-purpose float library.

#include <mpfr.h>

#include <algorithm>
#include <cstdio>
#include <stdexcept>
#include <string>

#include "rational.hpp"

namespace gammadelta {

class BigFloat {
  public:
    explicit BigFloat(mpfr_prec_t precision) {
        mpfr_init2(v_, std::max<mpfr_prec_t>(precision, MPFR_PREC_MIN));
        mpfr_set_zero(v_, 1);
    }

    BigFloat(const BigFloat& o) {
        mpfr_init2(v_, mpfr_get_prec(o.v_));
        mpfr_set(v_, o.v_, MPFR_RNDN);
    }

    BigFloat(BigFloat&& o) noexcept {
        mpfr_init2(v_, MPFR_PREC_MIN);
        mpfr_swap(v_, o.v_);
    }

    BigFloat& operator=(const BigFloat& o) {
        if (this != &o) {
            mpfr_set_prec(v_, mpfr_get_prec(o.v_));
            mpfr_set(v_, o.v_, MPFR_RNDN);
        }
        return *this;
    }

    BigFloat& operator=(BigFloat&& o) noexcept {
        if (this != &o) mpfr_swap(v_, o.v_);
        return *this;
    }

    ~BigFloat() { mpfr_clear(v_); }

    static BigFloat from_rational(const Rational& q, mpfr_prec_t precision) {
        BigFloat r(precision);
        mpfr_set_q(r.v_, q.get_mpq_t(), MPFR_RNDN);
        return r;
    }

    static BigFloat from_bigint(const BigInt& z, mpfr_prec_t precision) {
        BigFloat r(precision);
        mpfr_set_z(r.v_, z.get_mpz_t(), MPFR_RNDN);
        return r;
    }

    static BigFloat from_ulong(unsigned long u, mpfr_prec_t precision) {
        BigFloat r(precision);
        mpfr_set_ui(r.v_, u, MPFR_RNDN);
        return r;
    }

    /// ln of a positive rational, computed directly at the target precision.
    static BigFloat ln_of_rational(const Rational& q, mpfr_prec_t precision) {
        if (sgn(q) <= 0) throw std::invalid_argument("BigFloat: ln of non-positive rational");
        BigFloat r = from_rational(q, precision);
        mpfr_log(r.v_, r.v_, MPFR_RNDN);
        return r;
    }

    mpfr_prec_t precision() const { return mpfr_get_prec(v_); }
    mpfr_ptr raw() { return v_; }
    mpfr_srcptr raw() const { return v_; }

    bool is_zero() const { return mpfr_zero_p(v_) != 0; }
    int sign() const { return mpfr_sgn(v_); }

    /// Binary exponent e with 2^(e-1) <= |value| < 2^e. Only valid for
    /// nonzero finite values.
    mpfr_exp_t exponent() const {
        if (is_zero() || !mpfr_number_p(v_))
            throw std::logic_error("BigFloat: exponent of zero/non-finite value");
        return mpfr_get_exp(v_);
    }

    double to_double() const { return mpfr_get_d(v_, MPFR_RNDN); }

    /// Natural log of |value| as a double; usable far outside double range.
    double ln_abs_to_double() const {
        if (is_zero()) throw std::logic_error("BigFloat: ln of zero");
        BigFloat t(64);
        mpfr_abs(t.v_, v_, MPFR_RNDN);
        mpfr_log(t.v_, t.v_, MPFR_RNDN);
        return t.to_double();
    }

    /// Rounded copy at a (usually lower) precision.
    BigFloat rounded_to(mpfr_prec_t precision) const {
        BigFloat r(precision);
        mpfr_set(r.v_, v_, MPFR_RNDN);
        return r;
    }

    std::string to_string(int significant_digits) const {
        char* s = nullptr;
        mpfr_asprintf(&s, "%.*Rg", significant_digits, v_);
        std::string out(s);
        mpfr_free_str(s);
        return out;
    }

    friend BigFloat operator+(const BigFloat& a, const BigFloat& b) {
        BigFloat r(std::max(a.precision(), b.precision()));
        mpfr_add(r.v_, a.v_, b.v_, MPFR_RNDN);
        return r;
    }

    friend BigFloat operator-(const BigFloat& a, const BigFloat& b) {
        BigFloat r(std::max(a.precision(), b.precision()));
        mpfr_sub(r.v_, a.v_, b.v_, MPFR_RNDN);
        return r;
    }

    friend BigFloat operator*(const BigFloat& a, const BigFloat& b) {
        BigFloat r(std::max(a.precision(), b.precision()));
        mpfr_mul(r.v_, a.v_, b.v_, MPFR_RNDN);
        return r;
    }

    friend BigFloat operator/(const BigFloat& a, const BigFloat& b) {
        BigFloat r(std::max(a.precision(), b.precision()));
        mpfr_div(r.v_, a.v_, b.v_, MPFR_RNDN);
        return r;
    }

    BigFloat operator-() const {
        BigFloat r(precision());
        mpfr_neg(r.v_, v_, MPFR_RNDN);
        return r;
    }

    friend BigFloat abs(const BigFloat& a) {
        BigFloat r(a.precision());
        mpfr_abs(r.v_, a.v_, MPFR_RNDN);
        return r;
    }

    friend BigFloat ln(const BigFloat& a) {
        BigFloat r(a.precision());
        mpfr_log(r.v_, a.v_, MPFR_RNDN);
        return r;
    }

    friend BigFloat exp(const BigFloat& a) {
        BigFloat r(a.precision());
        mpfr_exp(r.v_, a.v_, MPFR_RNDN);
        return r;
    }

    friend int cmp(const BigFloat& a, const BigFloat& b) { return mpfr_cmp(a.v_, b.v_); }
    friend bool operator<(const BigFloat& a, const BigFloat& b) { return cmp(a, b) < 0; }
    friend bool operator<=(const BigFloat& a, const BigFloat& b) { return cmp(a, b) <= 0; }
    friend bool operator>(const BigFloat& a, const BigFloat& b) { return cmp(a, b) > 0; }
    friend bool operator>=(const BigFloat& a, const BigFloat& b) { return cmp(a, b) >= 0; }

    /// |value| <= 2^e (true for zero).
    bool abs_within_pow2(long e) const {
        if (is_zero()) return true;
        return exponent() <= e;
    }

    BigFloat& mul_rational(const Rational& q) {
        mpfr_mul_q(v_, v_, q.get_mpq_t(), MPFR_RNDN);
        return *this;
    }

    BigFloat& sub_rational(const Rational& q) {
        mpfr_sub_q(v_, v_, q.get_mpq_t(), MPFR_RNDN);
        return *this;
    }

    BigFloat& add_assign(const BigFloat& o) {
        mpfr_add(v_, v_, o.v_, MPFR_RNDN);
        return *this;
    }

    BigFloat& sub_assign(const BigFloat& o) {
        mpfr_sub(v_, v_, o.v_, MPFR_RNDN);
        return *this;
    }

  private:
    mpfr_t v_;
};

} // namespace gammadelta
