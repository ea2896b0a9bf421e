#include <catch2/catch_amalgamated.hpp>

#include <cmath>
#include <cstdlib>
#include <filesystem>
#include <fstream>
#include <unistd.h>
#include <sstream>
#include <string>
#include <sys/wait.h>
#include <vector>

#include <json.hpp>

#include "gammadelta/analysis.hpp"
#include "gammadelta/serialize.hpp"

using namespace gammadelta;

namespace {

std::vector<std::string> split(const std::string& line, char sep) {
    std::vector<std::string> out;
    std::stringstream stream(line);
    std::string item;
    while (std::getline(stream, item, sep)) out.push_back(item);
    if (!line.empty() && line.back() == sep) out.push_back("");
    return out;
}

std::vector<std::string> lines_of(const std::string& text) {
    std::vector<std::string> out;
    std::stringstream stream(text);
    std::string line;
    while (std::getline(stream, line)) out.push_back(line);
    return out;
}

int run_cli(const std::string& args) {
    const std::string command = std::string(GAMMADELTA_CLI_PATH) + " " + args;
    const int status = std::system(command.c_str());
    REQUIRE(status != -1);
    return WIFEXITED(status) ? WEXITSTATUS(status) : -1;
}

std::string slurp(const std::string& path) {
    std::ifstream in(path, std::ios::binary);
    REQUIRE(in.good());
    std::stringstream buffer;
    buffer << in.rdbuf();
    return buffer.str();
}

} // namespace

TEST_CASE("sweep rows reproduce the hand examples", "[analysis-io]") {
    SweepOptions opt;
    const auto euler_rows = converge_sweep({FamilyKind::euler, 0}, {2}, opt);
    REQUIRE(euler_rows.size() == 1);
    // |gamma - 37/64| = 9.0934e-4
    CHECK(euler_rows[0].log_abs_error == Catch::Approx(std::log(9.0933509846713939e-4)).margin(1e-9));
    CHECK(euler_rows[0].has_r);
    CHECK(euler_rows[0].has_slope);

    const auto gompertz_rows = converge_sweep({FamilyKind::gompertz, 0}, {1}, opt);
    // |delta - 3/5| = 3.6526e-3
    CHECK(gompertz_rows[0].log_abs_error ==
          Catch::Approx(std::log(3.6526376768059257e-3)).margin(1e-9));
}

TEST_CASE("degenerate and empty sweeps", "[analysis-io]") {
    SweepOptions opt;
    CHECK(converge_sweep({FamilyKind::euler, 0}, {}, opt).empty());
    // n=0 has Q=1: quality exponent undefined, slope defined only for n>=1
    const auto rows = converge_sweep({FamilyKind::euler, 0}, {0}, opt);
    CHECK_FALSE(rows[0].has_r);
    CHECK_FALSE(rows[0].has_slope);
    CHECK(rows[0].log_denom == 0.0);
}

TEST_CASE("prediction gap stays small through the pre-asymptotic range", "[analysis-io]") {
    SweepOptions opt;
    for (const FamilyKind kind : {FamilyKind::euler, FamilyKind::gompertz}) {
        const auto rows = converge_sweep({kind, 0}, {8, 16, 32, 64}, opt);
        for (const auto& row : rows) {
            REQUIRE(row.has_slope);
            CHECK(std::fabs(row.slope_gap) < 8.0);
        }
    }
}

TEST_CASE("error shrinks over dyadic leaps", "[analysis-io]") {
    SweepOptions opt;
    for (const FamilyKind kind : {FamilyKind::euler, FamilyKind::gompertz}) {
        const auto rows = converge_sweep({kind, 0}, {4, 8, 16, 32, 64}, opt);
        for (std::size_t i = 1; i < rows.size(); ++i)
            CHECK(rows[i].log_abs_error < rows[i - 1].log_abs_error - 2.0);
    }
}

TEST_CASE("fixed x away from 1 measures the shifted constant", "[analysis-io]") {
    SweepOptions opt;
    opt.x = Rational(2);
    const auto rows = converge_sweep({FamilyKind::euler, 0}, {10}, opt);
    CHECK_FALSE(rows[0].has_r); // non-unit x leaves no integer form
    CHECK(rows[0].has_slope);
    CHECK(rows[0].log_abs_error < -15.0);

    opt.x = make_rational(1, 3);
    const auto frac = converge_sweep({FamilyKind::gompertz, 0}, {6}, opt);
    CHECK(frac[0].log_abs_error < -10.0);
}

TEST_CASE("scaled-argument mode is evaluation only", "[analysis-io]") {
    SweepOptions opt;
    opt.x_scale = true;
    const auto rows = converge_sweep({FamilyKind::euler, 0}, {4, 8}, opt);
    for (const auto& row : rows) {
        CHECK_FALSE(row.has_slope);
        CHECK_FALSE(row.has_r);
        CHECK(std::isfinite(row.log_abs_error));
    }
    CHECK_THROWS_AS(converge_sweep({FamilyKind::euler, 0}, {0}, opt), std::invalid_argument);
}

TEST_CASE("baseline table spans families and flags degenerate rows", "[analysis-io]") {
    const std::vector<FamilyId> families = {{FamilyKind::euler, 0},
                                            {FamilyKind::gompertz, 0},
                                            {FamilyKind::euler_p, 2},
                                            {FamilyKind::pilehrood, 2},
                                            {FamilyKind::pilehrood, 3}};
    const auto rows = baseline_table(families, {0, 4}, 256);
    REQUIRE(rows.size() == 10);
    CHECK(rows[0].family == "euler");
    CHECK_FALSE(rows[0].has_r); // n=0, Q=1
    CHECK(rows[1].has_r);
    CHECK(rows[6].family == "pilehrood:2");
}

TEST_CASE("verification suites expose trivial empty ranges", "[analysis-io]") {
    CHECK(verify_recurrence(-1).pass);
    CHECK(verify_recurrence(-1).checks_run == 0);
    CHECK(verify_crosscheck(-1).checks_run == 0);
    CHECK(verify_integrality(-1).checks_run == 0);
}

TEST_CASE("integrality suite rejects the value-only baseline family", "[analysis-io]") {
    CHECK_THROWS_AS(verify_integrality({FamilyKind::pilehrood, 2}, 5), std::invalid_argument);
}

TEST_CASE("manifest timestamp honors SOURCE_DATE_EPOCH", "[analysis-io]") {
    setenv("SOURCE_DATE_EPOCH", "1700000000", 1);
    CHECK(manifest_timestamp() == "2023-11-14T22:13:20Z");
    unsetenv("SOURCE_DATE_EPOCH");
}

TEST_CASE("CSV and JSON emit the same values", "[analysis-io]") {
    RunManifest manifest;
    manifest.command = "converge";
    manifest.family = "euler";
    manifest.n_range = "1..6";
    manifest.timestamp = "2023-11-14T22:13:20Z";

    SweepOptions opt;
    std::vector<long> ns = {1, 2, 3, 4, 5, 6};
    const auto rows = converge_sweep({FamilyKind::euler, 0}, ns, opt);

    const std::string csv = csv_converge(manifest, rows);
    const auto csv_lines = lines_of(csv);
    REQUIRE(csv_lines.size() == 2 + rows.size());
    CHECK(csv_lines[0].rfind("# manifest: {", 0) == 0);
    CHECK(csv_lines[1] == "n,log_denom,log_abs_error,slope_predicted,slope_gap,r_measured");

    const nlohmann::ordered_json j = json_converge(manifest, rows);
    REQUIRE(j["rows"].size() == rows.size());
    for (std::size_t i = 0; i < rows.size(); ++i) {
        const auto fields = split(csv_lines[2 + i], ',');
        REQUIRE(fields.size() == 6);
        const auto& row = j["rows"][i];
        CHECK(std::stol(fields[0]) == row["n"].get<long>());
        CHECK(std::strtod(fields[1].c_str(), nullptr) == row["log_denom"].get<double>());
        CHECK(std::strtod(fields[2].c_str(), nullptr) == row["log_abs_error"].get<double>());
        CHECK(std::strtod(fields[3].c_str(), nullptr) == row["slope_predicted"].get<double>());
        CHECK(std::strtod(fields[4].c_str(), nullptr) == row["slope_gap"].get<double>());
        CHECK(std::strtod(fields[5].c_str(), nullptr) == row["r_measured"].get<double>());
    }
}

TEST_CASE("null measurements are empty CSV fields and JSON nulls", "[analysis-io]") {
    RunManifest manifest;
    manifest.command = "converge";
    manifest.family = "pilehrood:3";
    manifest.timestamp = "2023-11-14T22:13:20Z";
    SweepOptions opt;
    const auto rows = converge_sweep({FamilyKind::pilehrood, 3}, {0, 3}, opt);

    const auto csv_lines = lines_of(csv_converge(manifest, rows));
    const auto first = split(csv_lines[2], ',');
    REQUIRE(first.size() == 6);
    CHECK(first[3].empty()); // no pinned model for the baseline family
    CHECK(first[4].empty());
    CHECK(first[5].empty()); // n=0: Q=1

    const nlohmann::ordered_json j = json_converge(manifest, rows);
    CHECK(j["rows"][0]["slope_predicted"].is_null());
    CHECK(j["rows"][0]["r_measured"].is_null());
    CHECK(j["rows"][1]["r_measured"].is_number());
}

TEST_CASE("build tables serialize exact fraction strings", "[analysis-io]") {
    RunManifest manifest;
    manifest.command = "build";
    manifest.family = "euler";
    manifest.timestamp = "2023-11-14T22:13:20Z";
    std::vector<BuildRow> rows;
    for (long n = 0; n <= 2; ++n) rows.push_back(build_row(euler_mixed(n)));

    const auto csv_lines = lines_of(csv_build(manifest, rows));
    REQUIRE(csv_lines.size() == 5);
    CHECK(csv_lines[1] == "n,F1_coeffs,F2_coeffs");
    CHECK(csv_lines[2] == "0,0,1");
    CHECK(csv_lines[3] == "1,3;-5,1;2");
    CHECK(csv_lines[4] == "2,9/2;-2;-47/4,1;12;3");

    const nlohmann::ordered_json j = json_build(manifest, rows);
    CHECK(j["rows"][2]["F1_coeffs"] ==
          nlohmann::ordered_json::array({"9/2", "-2", "-47/4"}));
    CHECK(j["rows"][2]["F2_coeffs"] == nlohmann::ordered_json::array({"1", "12", "3"}));
}

TEST_CASE("CLI runs are deterministic under a pinned epoch", "[analysis-io]") {
    const std::string base = "env SOURCE_DATE_EPOCH=1700000000 " GAMMADELTA_CLI_PATH;
    const std::string dir =
        std::filesystem::temp_directory_path() / ("gammadelta_det_" + std::to_string(getpid()));
    REQUIRE(std::filesystem::create_directory(dir));
    auto path = [&](const char* name) { return dir + "/" + name; };
    auto run = [&](const std::string& args, const std::string& out) {
        const int status = std::system((base + " " + args + " --out " + out).c_str());
        REQUIRE(status != -1);
        REQUIRE(WEXITSTATUS(status) == 0);
    };
    run("build --family euler --n-max 6 --format json", path("a.json"));
    run("build --family euler --n-max 6 --format json", path("b.json"));
    CHECK(slurp(path("a.json")) == slurp(path("b.json")));

    run("converge --family gompertz --n-max 8 --format csv", path("a.csv"));
    run("converge --family gompertz --n-max 8 --format csv", path("b.csv"));
    CHECK(slurp(path("a.csv")) == slurp(path("b.csv")));
    CHECK(slurp(path("a.csv")).find("2023-11-14T22:13:20Z") != std::string::npos);
    std::filesystem::remove_all(dir);
}

TEST_CASE("CLI exit codes distinguish usage errors from results", "[analysis-io]") {
    CHECK(run_cli("verify recurrence --n-max 8 > /dev/null") == 0);
    CHECK(run_cli("verify crosscheck --n-max 5 > /dev/null") == 0);
    CHECK(run_cli("build --family bogus 2> /dev/null") == 2);
    CHECK(run_cli("verify bogus-suite --n-max 3 > /dev/null 2>&1") == 2);
    CHECK(run_cli("converge --family euler --x 0 2> /dev/null") == 2);
    CHECK(run_cli("build --family pilehrood:2 2> /dev/null") == 2);
    CHECK(run_cli("--version > /dev/null") == 0);
}
