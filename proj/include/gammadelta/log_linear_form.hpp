#pragma once

// Log-linear forms A(x) + B(x)*(c + ln x) for a tagged constant c, and the
// differential ("Rodrigues") step that maps one approximant family onto
// another. The class of such forms is closed under d/dx provided B is
// divisible by x, which multiplication by x^m guarantees throughout the m
// derivative passes of the step.

#include <cstddef>
#include <stdexcept>

#include "combinatorics.hpp"
#include "polynomial.hpp"

namespace gammadelta {

enum class ConstantTag { euler_gamma, none };

struct LogLinearForm {
    Polynomial rational_part; // A
    Polynomial log_part;      // B
    ConstantTag tag = ConstantTag::euler_gamma;

    bool operator==(const LogLinearForm& o) const {
        return rational_part == o.rational_part && log_part == o.log_part && tag == o.tag;
    }
};

/// d/dx [A + B*(c + ln x)] = (A' + B/x) + B'*(c + ln x).
/// Throws std::logic_error when B is not divisible by x (an internal error:
/// valid call sequences never produce that state).
inline LogLinearForm derivative(const LogLinearForm& f) {
    return {f.rational_part.derivative() + f.log_part.divided_by_x(),
            f.log_part.derivative(), f.tag};
}

/// The differential step (1/m!) d^m/dx^m [x^m * f(x)], implemented as m
/// single-derivative passes after one multiplication by x^m — deliberately
/// not a closed-form coefficient formula, so the families' closed forms can
/// be cross-checked against it as an independent derivation.
inline LogLinearForm rodrigues_step(const LogLinearForm& f, std::size_t m) {
    if (m == 0) return f;
    LogLinearForm g{f.rational_part.shifted_up(m), f.log_part.shifted_up(m), f.tag};
    for (std::size_t i = 0; i < m; ++i) g = derivative(g);
    const Rational scale = make_rational(BigInt(1), factorial(static_cast<unsigned long>(m)));
    return {g.rational_part * scale, g.log_part * scale, g.tag};
}

} // namespace gammadelta
