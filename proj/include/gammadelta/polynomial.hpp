#pragma once

// Dense univariate polynomials over exact rationals. Degrees in this project
// stay in the low thousands, so dense storage and schoolbook multiplication
// are the right tools. The zero polynomial is the empty coefficient list and
// reports degree -1, which keeps the division helpers free of special cases.

#include <cstddef>
#include <stdexcept>
#include <string>
#include <utility>
#include <vector>

#include "combinatorics.hpp"
#include "rational.hpp"

namespace gammadelta {

class Polynomial {
  public:
    Polynomial() = default;

    explicit Polynomial(std::vector<Rational> coefficients) : c_(std::move(coefficients)) {
        normalize();
    }

    static Polynomial constant(const Rational& value) {
        return Polynomial(std::vector<Rational>{value});
    }

    static Polynomial monomial(const Rational& coefficient, std::size_t power) {
        std::vector<Rational> c(power + 1, Rational(0));
        c[power] = coefficient;
        return Polynomial(std::move(c));
    }

    /// Degree; -1 for the zero polynomial.
    long degree() const { return static_cast<long>(c_.size()) - 1; }

    bool is_zero() const { return c_.empty(); }

    /// Coefficient of x^i (0 beyond the stored range).
    Rational coeff(std::size_t i) const { return i < c_.size() ? c_[i] : Rational(0); }

    const std::vector<Rational>& coefficients() const { return c_; }

    bool operator==(const Polynomial& o) const { return c_ == o.c_; }
    bool operator!=(const Polynomial& o) const { return !(*this == o); }

    Polynomial operator+(const Polynomial& o) const {
        std::vector<Rational> r(std::max(c_.size(), o.c_.size()), Rational(0));
        for (std::size_t i = 0; i < c_.size(); ++i) r[i] = c_[i];
        for (std::size_t i = 0; i < o.c_.size(); ++i) r[i] += o.c_[i];
        return Polynomial(std::move(r));
    }

    Polynomial operator-() const {
        std::vector<Rational> r(c_);
        for (auto& v : r) v = -v;
        return Polynomial(std::move(r));
    }

    Polynomial operator-(const Polynomial& o) const { return *this + (-o); }

    Polynomial operator*(const Polynomial& o) const {
        if (is_zero() || o.is_zero()) return Polynomial();
        std::vector<Rational> r(c_.size() + o.c_.size() - 1, Rational(0));
        for (std::size_t i = 0; i < c_.size(); ++i) {
            if (sgn(c_[i]) == 0) continue;
            for (std::size_t j = 0; j < o.c_.size(); ++j) r[i + j] += c_[i] * o.c_[j];
        }
        return Polynomial(std::move(r));
    }

    Polynomial operator*(const Rational& s) const {
        if (sgn(s) == 0) return Polynomial();
        std::vector<Rational> r(c_);
        for (auto& v : r) v *= s;
        return Polynomial(std::move(r));
    }

    Polynomial operator/(const Rational& s) const {
        if (sgn(s) == 0) throw std::invalid_argument("Polynomial: division by zero scalar");
        return *this * Rational(1 / s);
    }

    Polynomial derivative() const {
        if (c_.size() <= 1) return Polynomial();
        std::vector<Rational> r(c_.size() - 1);
        for (std::size_t i = 1; i < c_.size(); ++i)
            r[i - 1] = c_[i] * make_rational(static_cast<long>(i));
        return Polynomial(std::move(r));
    }

    /// Exact Horner evaluation.
    Rational eval(const Rational& x) const {
        Rational acc(0);
        for (std::size_t i = c_.size(); i-- > 0;) acc = acc * x + c_[i];
        return acc;
    }

    /// Multiply by x^m.
    Polynomial shifted_up(std::size_t m) const {
        if (is_zero() || m == 0) return m == 0 ? *this : Polynomial();
        std::vector<Rational> r(c_.size() + m, Rational(0));
        for (std::size_t i = 0; i < c_.size(); ++i) r[i + m] = c_[i];
        return Polynomial(std::move(r));
    }

    /// Exact division by x. Throws std::logic_error when the constant term is
    /// nonzero — in this project that is always an internal bug, never input.
    Polynomial divided_by_x() const {
        if (is_zero()) return Polynomial();
        if (sgn(c_[0]) != 0)
            throw std::logic_error("Polynomial: division by x leaves a remainder");
        return Polynomial(std::vector<Rational>(c_.begin() + 1, c_.end()));
    }

    /// Euclidean division: *this = q * divisor + r with deg r < deg divisor.
    std::pair<Polynomial, Polynomial> divmod(const Polynomial& divisor) const {
        if (divisor.is_zero())
            throw std::invalid_argument("Polynomial: division by zero polynomial");
        if (degree() < divisor.degree()) return {Polynomial(), *this};
        std::vector<Rational> rem(c_);
        std::vector<Rational> quot(c_.size() - divisor.c_.size() + 1, Rational(0));
        const Rational& lead = divisor.c_.back();
        for (std::size_t top = rem.size(); top >= divisor.c_.size(); --top) {
            Rational f = rem[top - 1] / lead;
            if (sgn(f) != 0) {
                std::size_t shift = top - divisor.c_.size();
                quot[shift] = f;
                for (std::size_t j = 0; j < divisor.c_.size(); ++j)
                    rem[shift + j] -= f * divisor.c_[j];
            }
            rem.pop_back();
        }
        return {Polynomial(std::move(quot)), Polynomial(std::move(rem))};
    }

    /// Exact synthetic division by (x + k); throws std::logic_error if x = -k
    /// is not a root. Used by the partial-fraction pipeline where exactness
    /// is a structural guarantee.
    Polynomial divided_by_linear(long k) const {
        if (is_zero()) return Polynomial();
        const Rational kk = make_rational(k);
        std::vector<Rational> q(c_.size() - 1, Rational(0));
        Rational carry = c_.back();
        for (std::size_t i = c_.size() - 1; i-- > 0;) {
            q[i] = carry;
            carry = c_[i] - kk * carry;
        }
        if (sgn(carry) != 0)
            throw std::logic_error("Polynomial: division by (x + k) leaves a remainder");
        return Polynomial(std::move(q));
    }

    /// lcm of all coefficient denominators (1 for the zero polynomial).
    /// M = denominator_lcm(p) is the least positive integer with M*p integral.
    BigInt denominator_lcm() const {
        BigInt m(1);
        for (const auto& v : c_) mpz_lcm(m.get_mpz_t(), m.get_mpz_t(), v.get_den().get_mpz_t());
        return m;
    }

    bool is_integral() const { return denominator_lcm() == 1; }

    /// Exact coefficient strings, ascending powers; {"0"} for the zero
    /// polynomial so serialized rows are never empty.
    std::vector<std::string> coefficient_strings() const {
        if (is_zero()) return {"0"};
        std::vector<std::string> out;
        out.reserve(c_.size());
        for (const auto& v : c_) out.push_back(gammadelta::to_string(v));
        return out;
    }

  private:
    void normalize() {
        while (!c_.empty() && sgn(c_.back()) == 0) c_.pop_back();
    }

    std::vector<Rational> c_;
};

inline Polynomial operator*(const Rational& s, const Polynomial& p) { return p * s; }

} // namespace gammadelta
