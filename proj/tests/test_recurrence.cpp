#include <catch2/catch_amalgamated.hpp>

#include <array>
#include <fstream>
#include <sstream>
#include <vector>

#include <json.hpp>

#include "gammadelta/analysis.hpp"
#include "gammadelta/recurrence.hpp"
#include "gammadelta/serialize.hpp"

using namespace gammadelta;

namespace {

using Expanded = std::vector<long>;

void check_expanded(const FactoredCoefficient& c, const Expanded& expected) {
    const std::vector<BigInt> got = c.expanded();
    REQUIRE(got.size() == expected.size());
    for (std::size_t i = 0; i < got.size(); ++i) CHECK(got[i] == BigInt(expected[i]));
}

} // namespace

TEST_CASE("factored coefficients expand to the frozen degree-8 polynomials", "[recurrence]") {
    const RecurrenceSpec& e = euler_recurrence();
    check_expanded(e.coeff[0],
                   {-72408, -364268, -776746, -915927, -653189, -288742, -77376, -11511, -729});
    check_expanded(e.coeff[1], {3658696, 12992380, 19805218, 16905043, 8823088, 2877382, 571026,
                                62811, 2916});
    check_expanded(e.coeff[2], {6413772, 20769508, 27733489, 19463372, 7426532, 1312308, -17307,
                                -41364, -4374});
    check_expanded(e.coeff[3], {3834036, 14307120, 22397519, 19252763, 9957427, 3177823, 611814,
                                64998, 2916});
    check_expanded(e.coeff[4],
                   {-985344, -3588800, -5516656, -4680756, -2401604, -764479, -147747, -15885,
                    -729});

    const RecurrenceSpec& g = gompertz_recurrence();
    check_expanded(g.coeff[0],
                   {-76464, -386936, -828994, -980043, -698213, -306754, -81168, -11835, -729});
    check_expanded(g.coeff[1], {2518704, 9134952, 14295626, 12595085, 6826972, 2329603, 488508,
                                57546, 2916});
    check_expanded(g.coeff[2], {7476768, 24757376, 33243300, 23155644, 8678747, 1495014, -17703,
                                -43308, -4374});
    check_expanded(g.coeff[3], {5108448, 20830240, 33258844, 28075080, 13930153, 4194157, 750507,
                                72855, 2916});
    check_expanded(g.coeff[4],
                   {-916224, -3679808, -5896528, -5059740, -2582396, -810559, -153807, -16209,
                    -729});
}

TEST_CASE("coefficient evaluation at n=0 matches hand values", "[recurrence]") {
    const RecurrenceSpec& e = euler_recurrence();
    const long expected_e[] = {-72408, 3658696, 6413772, 3834036, -985344};
    for (std::size_t j = 0; j < 5; ++j) CHECK(e.coefficient(j, BigInt(0)) == expected_e[j]);

    const RecurrenceSpec& g = gompertz_recurrence();
    const long expected_g[] = {-76464, 2518704, 7476768, 5108448, -916224};
    for (std::size_t j = 0; j < 5; ++j) CHECK(g.coefficient(j, BigInt(0)) == expected_g[j]);
}

TEST_CASE("hand-verified seed windows at n=0", "[recurrence]") {
    const std::array<Rational, 5> euler_f2 = {Rational(1), Rational(3), Rational(16),
                                              make_rational(256, 3), make_rational(1789, 4)};
    CHECK(recurrence_residual(euler_recurrence(), euler_f2, 0) == 0);

    const std::array<Rational, 5> gompertz_f2 = {Rational(1), Rational(5), Rational(37),
                                                 make_rational(797, 3), make_rational(10781, 6)};
    CHECK(recurrence_residual(gompertz_recurrence(), gompertz_f2, 0) == 0);
}

TEST_CASE("recurrence suite on closed-form values", "[recurrence]") {
    const VerifyReport report = verify_recurrence(30);
    CHECK(report.pass);
    CHECK(report.checks_run == 2 * 2 * 31);
    CHECK(report.first_counterexample.empty());
}

TEST_CASE("recurrence fast path agrees with direct evaluation", "[recurrence]") {
    for (const FamilyKind kind : {FamilyKind::euler, FamilyKind::gompertz}) {
        const FamilyId family{kind, 0};
        const auto fast = value_sweep(family, 30, Rational(1), true);
        const auto direct = value_sweep(family, 30, Rational(1), false);
        REQUIRE(fast.size() == direct.size());
        for (std::size_t i = 0; i < fast.size(); ++i) {
            CHECK(fast[i].f1 == direct[i].f1);
            CHECK(fast[i].f2 == direct[i].f2);
        }
    }
}

TEST_CASE("characteristic normalization approaches the quartic-root pattern", "[recurrence]") {
    for (const RecurrenceSpec* spec : {&euler_recurrence(), &gompertz_recurrence()}) {
        const CharacteristicLimitReport report =
            characteristic_limit_check(*spec, BigInt(1000000));
        CHECK(report.max_relative_deviation < 0.01);
        CHECK(report.max_relative_deviation > 0.0);
        for (std::size_t j = 0; j < 5; ++j)
            CHECK(report.scaled[j] ==
                  Catch::Approx(double(spec->characteristic_target[j])).epsilon(1e-4));
    }
}

TEST_CASE("growth model values", "[recurrence]") {
    CHECK(predicted_log(euler_asymptotics(1.0), 1.0) == Catch::Approx(3.125));
    CHECK(predicted_log(gompertz_asymptotics(1.0), 1.0) == Catch::Approx(4.125));
    CHECK(predicted_log(euler_asymptotics(1.0), 1e4) == Catch::Approx(3935.889).margin(5e-3));
    CHECK(predicted_log(gompertz_asymptotics(1.0), 1e4) == Catch::Approx(4035.889).margin(5e-3));
    CHECK(error_decay_log(euler_asymptotics(1.0), 1024.0) ==
          Catch::Approx(4 * 181.01933598375618 - 32.0 - 0.375 * 5.656854249492381).margin(1e-9));
}

TEST_CASE("drift report arithmetic", "[recurrence]") {
    const AsymptoticModel model = euler_asymptotics(1.0);
    const std::vector<long> idx = {256, 512};
    const std::vector<double> logs = {predicted_log(model, 256) + 1.0,
                                      predicted_log(model, 512) + 1.25};
    const DriftReport report = drift_report(model, idx, logs);
    CHECK(report.offsets[0] == Catch::Approx(1.0));
    CHECK(report.offsets[1] == Catch::Approx(1.25));
    CHECK(report.max_delta == Catch::Approx(0.25));
    CHECK_THROWS_AS(drift_report(model, {1}, {0.0}), std::invalid_argument);
}

TEST_CASE("shipped recurrence data file equals the library export", "[recurrence]") {
    std::ifstream in(std::string(GAMMADELTA_DATA_DIR) + "/five_term_recurrences_x1.json",
                     std::ios::binary);
    REQUIRE(in.good());
    std::stringstream buffer;
    buffer << in.rdbuf();
    CHECK(buffer.str() == recurrence_table_json().dump(2) + "\n");
}
