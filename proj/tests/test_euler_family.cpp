#include <catch2/catch_amalgamated.hpp>

#include "gammadelta/analysis.hpp"
#include "gammadelta/euler_family.hpp"

using namespace gammadelta;

namespace {
Polynomial poly(std::vector<Rational> c) { return Polynomial(std::move(c)); }
}

TEST_CASE("seed-family closed form at small n", "[euler-family]") {
    const ApproximantPair p1 = laguerre1_typeI(1);
    CHECK(p1.numerator == poly({Rational(2), Rational(-3)}));
    CHECK(p1.denominator == poly({Rational(1), Rational(1)}));

    const ApproximantPair p2 = laguerre1_typeI(2);
    CHECK(p2.numerator == poly({Rational(3), Rational(-4), make_rational(-9, 4)}));
    CHECK(p2.denominator == poly({Rational(1), Rational(4), make_rational(1, 2)}));
}

TEST_CASE("main-family closed form at small n", "[euler-family]") {
    const ApproximantPair p0 = euler_mixed(0);
    CHECK(p0.numerator.is_zero());
    CHECK(p0.denominator == Polynomial::constant(Rational(1)));

    const ApproximantPair p1 = euler_mixed(1);
    CHECK(p1.numerator == poly({Rational(3), Rational(-5)}));
    CHECK(p1.denominator == poly({Rational(1), Rational(2)}));

    const ApproximantPair p2 = euler_mixed(2);
    CHECK(p2.numerator == poly({make_rational(9, 2), Rational(-2), make_rational(-47, 4)}));
    CHECK(p2.denominator == poly({Rational(1), Rational(12), Rational(3)}));
}

TEST_CASE("parametric family brackets and frozen p=2 case", "[euler-family]") {
    const ApproximantPair q = euler_p_family(1, 2);
    CHECK(q.numerator == poly({Rational(4), Rational(-8)}));
    CHECK(q.denominator == poly({Rational(1), Rational(4)}));

    for (long n = 0; n <= 20; ++n) {
        const ApproximantPair base = euler_p_family(n, 1);
        const ApproximantPair main = euler_mixed(n);
        CHECK(base.numerator == main.numerator);
        CHECK(base.denominator == main.denominator);
        const ApproximantPair zero = euler_p_family(n, 0);
        const ApproximantPair seed = laguerre1_typeI(n);
        CHECK(zero.numerator == seed.numerator);
        CHECK(zero.denominator == seed.denominator);
    }
}

TEST_CASE("baseline linear forms at small n", "[euler-family]") {
    CHECK(pilehrood_baseline(1, 2) == std::pair<Rational, Rational>(Rational(1), Rational(2)));
    CHECK(pilehrood_baseline(2, 2) == std::pair<Rational, Rational>(Rational(4), Rational(7)));
    // uniform value convention stores (-P, Q)
    const ValuePair v = value_pair_direct({FamilyKind::pilehrood, 2}, 2, Rational(1));
    CHECK(v.f1 == Rational(-4));
    CHECK(v.f2 == Rational(7));
    CHECK_THROWS_AS(value_pair_direct({FamilyKind::pilehrood, 2}, 2, Rational(2)),
                    std::invalid_argument);
}

TEST_CASE("integrality scalers hold with no extra multiplier", "[euler-family]") {
    CHECK(family_scalers({FamilyKind::euler, 0}, 5) ==
          std::pair<BigInt, BigInt>(BigInt(120) * 60, BigInt(120)));
    CHECK(family_scalers({FamilyKind::gompertz, 0}, 5) ==
          std::pair<BigInt, BigInt>(BigInt(120), BigInt(120)));
    CHECK(family_scalers({FamilyKind::pilehrood, 3}, 5) ==
          std::pair<BigInt, BigInt>(BigInt(1), BigInt(1)));

    for (long n = 0; n <= 25; ++n) {
        const BigInt lcm = lcm_upto(static_cast<unsigned long>(n));
        for (long p : {0L, 1L, 2L, 3L}) {
            const ScalerReport r = diophantine_scaler_check(euler_p_family(n, p));
            CHECK(r.denominator_scaler_ok);
            CHECK(r.numerator_scaler_ok);
            // the factor beyond n! that the numerator genuinely needs divides
            // lcm(1..n), which is why the canonical scaler is n! * lcm(1..n)
            CHECK(lcm % r.minimal_numerator_multiplier == 0);
        }
    }
    // the harmonic tails do require more than n! alone once n is past 1
    CHECK(diophantine_scaler_check(euler_mixed(2)).minimal_numerator_multiplier == 2);
}

TEST_CASE("linear evaluation route matches polynomial route", "[euler-family]") {
    for (long n = 0; n <= 15; ++n) {
        const ApproximantPair pair = euler_mixed(n);
        for (const Rational& x : {Rational(1), make_rational(2, 3), Rational(5)}) {
            const ValuePair v = value_pair_direct({FamilyKind::euler, 0}, n, x);
            CHECK(v.f1 == pair.numerator.eval(x));
            CHECK(v.f2 == pair.denominator.eval(x));
        }
    }
}

TEST_CASE("log-linear view carries the right constant tag", "[euler-family]") {
    const LogLinearForm f = to_log_linear(euler_mixed(3));
    CHECK(f.tag == ConstantTag::euler_gamma);
    CHECK(f.rational_part == euler_mixed(3).numerator);
    CHECK(f.log_part == euler_mixed(3).denominator);
}

TEST_CASE("family labels", "[euler-family]") {
    CHECK(FamilyId{FamilyKind::euler, 0}.label() == "euler");
    CHECK(FamilyId{FamilyKind::euler_p, 2}.label() == "euler-p:2");
    CHECK(FamilyId{FamilyKind::pilehrood, 3}.label() == "pilehrood:3");
    CHECK(FamilyId{FamilyKind::gompertz, 0}.label() == "gompertz");
    CHECK(FamilyId{FamilyKind::laguerre1, 0}.label() == "laguerre1");
}
