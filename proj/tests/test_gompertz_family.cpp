#include <catch2/catch_amalgamated.hpp>

#include "gammadelta/gompertz_family.hpp"

using namespace gammadelta;

namespace {
Polynomial poly(std::vector<Rational> c) { return Polynomial(std::move(c)); }
}

TEST_CASE("extraction pipeline at small n", "[gompertz-family]") {
    const ApproximantPair p0 = gompertz_pair(0);
    CHECK(p0.numerator.is_zero());
    CHECK(p0.denominator == Polynomial::constant(Rational(1)));

    const ApproximantPair p1 = gompertz_pair(1);
    CHECK(p1.numerator == Polynomial::constant(Rational(-3)));
    CHECK(p1.denominator == poly({Rational(1), Rational(4)}));

    const ApproximantPair p2 = gompertz_pair(2);
    CHECK(p2.numerator == poly({make_rational(-9, 2), make_rational(-35, 2)}));
    CHECK(p2.denominator == poly({Rational(1), Rational(18), Rational(18)}));
}

TEST_CASE("closed-form denominator values at x=1", "[gompertz-family]") {
    const Rational expected[] = {Rational(1), Rational(5), Rational(37), make_rational(797, 3),
                                 make_rational(10781, 6)};
    for (long n = 0; n <= 4; ++n)
        CHECK(gompertz_denominator(n).eval(Rational(1)) == expected[n]);
}

TEST_CASE("pipeline reproduces the closed-form denominator", "[gompertz-family]") {
    for (long n = 0; n <= 25; ++n)
        CHECK(gompertz_pair(n).denominator == gompertz_denominator(n));
}

TEST_CASE("numerator degree is one below the index", "[gompertz-family]") {
    CHECK(gompertz_pair(0).numerator.degree() == -1);
    for (long n = 1; n <= 20; ++n) CHECK(gompertz_pair(n).numerator.degree() == n - 1);
}

TEST_CASE("factorial scaling makes both polynomials integral", "[gompertz-family]") {
    for (long n = 0; n <= 40; ++n) {
        const GompertzIntegrality report = gompertz_integrality_check(n);
        CHECK(report.numerator_ok);
        CHECK(report.denominator_ok);
        CHECK(report.ok());
    }
}

TEST_CASE("mellin kernel shape", "[gompertz-family]") {
    for (long n = 1; n <= 8; ++n) {
        const MellinRationalFunction m = mellin_rational(n);
        CHECK(m.n == n);
        CHECK(m.numerator_s.degree() == 2 * n);
        CHECK(m.scale == make_rational(BigInt(1), factorial(static_cast<unsigned long>(n))));
    }
}
