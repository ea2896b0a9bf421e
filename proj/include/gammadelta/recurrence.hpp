#pragma once

// Five-term holonomic recurrences (order 4 in the index, polynomial
// coefficients of degree 8) satisfied at x = 1 by both the numerator and the
// denominator sequences of the Euler-constant and Gompertz-constant
// approximant families, together with the Birkhoff–Trjitzinsky asymptotic
// model attached to their shared characteristic root structure.
//
// Coefficients are stored in factored form (sign, linear factors (n+a)^e,
// and an irreducible residual core in ascending powers of n) and can be
// expanded on demand; both presentations are frozen in data/ and in tests.

#include <array>
#include <cmath>
#include <cstddef>
#include <stdexcept>
#include <string>
#include <utility>
#include <vector>

#include "rational.hpp"

namespace gammadelta {

/// One polynomial coefficient c_j(n) = sign * prod_i (n + shift_i)^exp_i * core(n).
struct FactoredCoefficient {
    int sign = 1;
    std::vector<std::pair<long, int>> linear_factors; ///< (shift, exponent) pairs
    std::vector<BigInt> core;                         ///< ascending powers of n

    BigInt eval(const BigInt& n) const {
        BigInt value = 0;
        for (std::size_t i = core.size(); i-- > 0;) value = value * n + core[i];
        for (const auto& [shift, exp] : linear_factors) {
            BigInt factor = n + shift;
            for (int e = 0; e < exp; ++e) value *= factor;
        }
        return sign < 0 ? BigInt(-value) : value;
    }

    /// Full expansion in ascending powers of n.
    std::vector<BigInt> expanded() const {
        std::vector<BigInt> acc = core;
        if (acc.empty()) acc.push_back(BigInt(0));
        for (const auto& [shift, exp] : linear_factors) {
            for (int e = 0; e < exp; ++e) {
                std::vector<BigInt> next(acc.size() + 1, BigInt(0));
                for (std::size_t i = 0; i < acc.size(); ++i) {
                    next[i] += acc[i] * shift;
                    next[i + 1] += acc[i];
                }
                acc = std::move(next);
            }
        }
        if (sign < 0)
            for (auto& c : acc) c = -c;
        return acc;
    }
};

/// A five-term recurrence sum_{j=0..4} c_j(n) y_{n+j} = 0 with its
/// characteristic-normalization targets lim c_j(n)/n^8.
struct RecurrenceSpec {
    std::string family_label;
    std::array<FactoredCoefficient, 5> coeff;
    std::array<long, 5> characteristic_target{};

    BigInt coefficient(std::size_t j, const BigInt& n) const { return coeff.at(j).eval(n); }
};

/// Shared characteristic normalization: -729 (lambda - 1)^4.
inline constexpr std::array<long, 5> kCharacteristicTargets = {-729, 2916, -4374, 2916, -729};

inline const RecurrenceSpec& euler_recurrence() {
    static const RecurrenceSpec spec = {
        "euler",
        {{
            {-1,
             {{1, 3}, {2, 1}},
             {BigInt(36204), BigInt(55420), BigInt(31485), BigInt(7866), BigInt(729)}},
            {1,
             {{2, 1}},
             {BigInt(1829348), BigInt(5581516), BigInt(7111851), BigInt(4896596),
              BigInt(1963246), BigInt(457068), BigInt(56979), BigInt(2916)}},
            {1,
             {},
             {BigInt(6413772), BigInt(20769508), BigInt(27733489), BigInt(19463372),
              BigInt(7426532), BigInt(1312308), BigInt(-17307), BigInt(-41364), BigInt(-4374)}},
            {1,
             {{3, 1}},
             {BigInt(1278012), BigInt(4343036), BigInt(6018161), BigInt(4411534),
              BigInt(1848631), BigInt(443064), BigInt(56250), BigInt(2916)}},
            {-1,
             {{3, 1}, {4, 3}},
             {BigInt(5132), BigInt(13132), BigInt(12261), BigInt(4950), BigInt(729)}},
        }},
        kCharacteristicTargets};
    return spec;
}

inline const RecurrenceSpec& gompertz_recurrence() {
    static const RecurrenceSpec spec = {
        "gompertz",
        {{
            {-1,
             {{1, 3}, {2, 1}},
             {BigInt(38232), BigInt(59656), BigInt(33657), BigInt(8190), BigInt(729)}},
            {1,
             {{2, 1}},
             {BigInt(1259352), BigInt(3937800), BigInt(5178913), BigInt(3708086),
              BigInt(1559443), BigInt(385080), BigInt(51714), BigInt(2916)}},
            {1,
             {},
             {BigInt(7476768), BigInt(24757376), BigInt(33243300), BigInt(23155644),
              BigInt(8678747), BigInt(1495014), BigInt(-17703), BigInt(-43308), BigInt(-4374)}},
            {1,
             {{3, 1}},
             {BigInt(1702816), BigInt(6375808), BigInt(8961012), BigInt(6371356),
              BigInt(2519599), BigInt(558186), BigInt(64107), BigInt(2916)}},
            {-1,
             {{3, 1}, {4, 3}},
             {BigInt(4772), BigInt(13996), BigInt(13461), BigInt(5274), BigInt(729)}},
        }},
        kCharacteristicTargets};
    return spec;
}

/// Exact residual sum_{j=0..4} c_j(n) window[j] for window[j] = y_{n+j}.
inline Rational recurrence_residual(const RecurrenceSpec& spec,
                                    const std::array<Rational, 5>& window, long n) {
    if (n < 0) throw std::invalid_argument("recurrence_residual: n must be >= 0");
    Rational residual(0);
    const BigInt nn(n);
    for (std::size_t j = 0; j < 5; ++j) residual += Rational(spec.coefficient(j, nn)) * window[j];
    residual.canonicalize();
    return residual;
}

/// Characteristic normalization check: c_j(n)/n^8 against the targets.
struct CharacteristicLimitReport {
    std::array<double, 5> scaled{};             ///< c_j(n) / n^8
    std::array<double, 5> relative_deviation{}; ///< |scaled - target| / |target|
    double max_relative_deviation = 0.0;
};

inline CharacteristicLimitReport characteristic_limit_check(const RecurrenceSpec& spec,
                                                            const BigInt& n) {
    if (n <= 0) throw std::invalid_argument("characteristic_limit_check: n must be positive");
    BigInt n8 = 1;
    for (int i = 0; i < 8; ++i) n8 *= n;
    CharacteristicLimitReport report;
    for (std::size_t j = 0; j < 5; ++j) {
        Rational ratio(spec.coefficient(j, n), n8);
        ratio.canonicalize();
        report.scaled[j] = ratio.get_d();
        const double target = static_cast<double>(spec.characteristic_target[j]);
        report.relative_deviation[j] = std::fabs(report.scaled[j] - target) / std::fabs(target);
        if (report.relative_deviation[j] > report.max_relative_deviation)
            report.max_relative_deviation = report.relative_deviation[j];
    }
    return report;
}

/// Birkhoff–Trjitzinsky growth model for the dominant solution at argument x:
/// omega = x^{1/4}; sqrt_sign is -1 on the Euler side and +1 on the Gompertz
/// side (the subdominant-square-root branch choice).
struct AsymptoticModel {
    double omega = 1.0;
    int sqrt_sign = -1;
};

inline AsymptoticModel euler_asymptotics(double x = 1.0) { return {std::pow(x, 0.25), -1}; }
inline AsymptoticModel gompertz_asymptotics(double x = 1.0) { return {std::pow(x, 0.25), +1}; }

/// Predicted ln y_n for the dominant recurrence solution (up to an additive
/// constant): -(9/8) ln n + 4 w n^{3/4} + s (1/2) w^2 n^{1/2} - (3/8) w^3 n^{1/4}.
inline double predicted_log(const AsymptoticModel& model, double n) {
    if (n <= 0) throw std::invalid_argument("predicted_log: n must be positive");
    const double w = model.omega;
    const double q = std::pow(n, 0.25);
    return -(9.0 / 8.0) * std::log(n) + 4.0 * w * q * q * q +
           model.sqrt_sign * 0.5 * w * w * q * q - (3.0 / 8.0) * w * w * w * q;
}

/// Predicted -ln of the approximation error (ratio of subdominant to dominant
/// solution): 4 w n^{3/4} + s w^2 n^{1/2} - (3/8) w^3 n^{1/4}. Note the full
/// (not halved) coefficient on the square-root term: the error exponent is a
/// difference of two conjugate expansions.
inline double error_decay_log(const AsymptoticModel& model, double n) {
    if (n <= 0) throw std::invalid_argument("error_decay_log: n must be positive");
    const double w = model.omega;
    const double q = std::pow(n, 0.25);
    return 4.0 * w * q * q * q + model.sqrt_sign * w * w * q * q - (3.0 / 8.0) * w * w * w * q;
}

/// Stability diagnostic for the constant term the model cannot pin down:
/// C_n = (measured ln y_n) - predicted_log(n) should converge, so consecutive
/// dyadic differences |C_{2m} - C_m| must shrink.
struct DriftReport {
    std::vector<double> offsets;     ///< C_n at each requested index
    std::vector<double> deltas;      ///< |offsets[i+1] - offsets[i]|
    double max_delta = 0.0;
};

inline DriftReport drift_report(const AsymptoticModel& model, const std::vector<long>& indices,
                                const std::vector<double>& measured_log) {
    if (indices.size() != measured_log.size() || indices.size() < 2)
        throw std::invalid_argument("drift_report: need matching lists with >= 2 entries");
    DriftReport report;
    for (std::size_t i = 0; i < indices.size(); ++i)
        report.offsets.push_back(measured_log[i] -
                                 predicted_log(model, static_cast<double>(indices[i])));
    for (std::size_t i = 0; i + 1 < report.offsets.size(); ++i) {
        const double d = std::fabs(report.offsets[i + 1] - report.offsets[i]);
        report.deltas.push_back(d);
        if (d > report.max_delta) report.max_delta = d;
    }
    return report;
}

} // namespace gammadelta
