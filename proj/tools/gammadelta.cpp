// Command-line surface: build exact coefficient tables, run exact
// verification suites, sweep convergence measurements, and compare families
// against the factorial-weighted baseline. Every data output embeds a run
// manifest; with SOURCE_DATE_EPOCH set, reruns are byte-identical.
//
// Exit codes: 0 success, 1 verification/measurement failure, 2 usage error,
// 3 required precision exceeds the working cap.

#include <CLI11.hpp>

#include <cstdio>
#include <fstream>
#include <iostream>
#include <sstream>
#include <string>
#include <vector>

#include "gammadelta/analysis.hpp"
#include "gammadelta/serialize.hpp"
#include "gammadelta/version.hpp"

namespace {

using namespace gammadelta;

FamilyId parse_family(const std::string& text) {
    const auto parse_param = [&](const std::string& prefix) -> long {
        const std::string tail = text.substr(prefix.size());
        std::size_t used = 0;
        const long value = std::stol(tail, &used);
        if (used != tail.size()) throw std::invalid_argument("trailing characters");
        return value;
    };
    try {
        if (text == "euler") return {FamilyKind::euler, 0};
        if (text == "gompertz") return {FamilyKind::gompertz, 0};
        if (text == "laguerre1") return {FamilyKind::laguerre1, 0};
        if (text.rfind("euler-p:", 0) == 0) {
            const long p = parse_param("euler-p:");
            if (p < 0) throw std::invalid_argument("p must be >= 0");
            return {FamilyKind::euler_p, p};
        }
        if (text.rfind("pilehrood:", 0) == 0) {
            const long a = parse_param("pilehrood:");
            if (a < 1) throw std::invalid_argument("a must be >= 1");
            return {FamilyKind::pilehrood, a};
        }
    } catch (const std::exception&) {
        // fall through to the uniform error below
    }
    throw CLI::ValidationError(
        "--family", "expected euler|gompertz|laguerre1|euler-p:<p>|pilehrood:<a>, got '" + text +
                        "'");
}

std::vector<long> parse_n_list(const std::string& text) {
    std::vector<long> ns;
    std::stringstream stream(text);
    std::string item;
    while (std::getline(stream, item, ',')) {
        if (item.empty()) continue;
        std::size_t used = 0;
        const long n = std::stol(item, &used);
        if (used != item.size() || n < 0)
            throw CLI::ValidationError("--n-list", "expected comma-separated n >= 0, got '" +
                                                       item + "'");
        ns.push_back(n);
    }
    return ns;
}

Rational parse_x(const std::string& text) {
    try {
        Rational x = parse_rational(text);
        if (sgn(x) <= 0) throw std::invalid_argument("x must be positive");
        return x;
    } catch (const std::exception& e) {
        throw CLI::ValidationError("--x", std::string("expected positive <num>[/<den>]: ") +
                                              e.what());
    }
}

void write_output(const std::string& path, const std::string& content) {
    if (path.empty() || path == "-") {
        std::cout << content;
        return;
    }
    std::ofstream out(path, std::ios::binary);
    if (!out) throw std::runtime_error("cannot open output file: " + path);
    out << content;
}

struct CommonOptions {
    std::string family_text = "euler";
    std::string x_text = "1";
    std::string n_list_text;
    long n_max = -1;
    long precision_bits = 256;
    std::string format = "csv";
    std::string out_path;
};

std::vector<long> resolve_ns(const CommonOptions& opt, long default_n_max) {
    if (!opt.n_list_text.empty()) return parse_n_list(opt.n_list_text);
    const long top = opt.n_max >= 0 ? opt.n_max : default_n_max;
    std::vector<long> ns;
    for (long n = 0; n <= top; ++n) ns.push_back(n);
    return ns;
}

std::string describe_range(const CommonOptions& opt, long default_n_max) {
    if (!opt.n_list_text.empty()) return opt.n_list_text;
    const long top = opt.n_max >= 0 ? opt.n_max : default_n_max;
    return "0.." + std::to_string(top);
}

RunManifest make_manifest(const std::string& command, const FamilyId& family,
                          const CommonOptions& opt, const std::string& n_range) {
    RunManifest m;
    m.command = command;
    m.family = family.label();
    m.parameter =
        (family.kind == FamilyKind::euler_p || family.kind == FamilyKind::pilehrood)
            ? family.param
            : 0;
    m.x = opt.x_text;
    m.n_range = n_range;
    m.precision_bits = opt.precision_bits;
    m.output_format = opt.format;
    m.timestamp = manifest_timestamp();
    return m;
}

int run_build(const CommonOptions& opt) {
    const FamilyId family = parse_family(opt.family_text);
    if (family.kind == FamilyKind::pilehrood)
        throw CLI::ValidationError("--family",
                                   "the baseline family has values only, no coefficient table");
    parse_x(opt.x_text); // validated for the manifest even though coefficients are x-free
    const std::vector<long> ns = resolve_ns(opt, 10);
    std::vector<BuildRow> rows(ns.size());
    detail::parallel_for(0, static_cast<long>(ns.size()), [&](long i) {
        const long n = ns[static_cast<std::size_t>(i)];
        ApproximantPair pair;
        switch (family.kind) {
            case FamilyKind::laguerre1: pair = laguerre1_typeI(n); break;
            case FamilyKind::euler: pair = euler_mixed(n); break;
            case FamilyKind::euler_p: pair = euler_p_family(n, family.param); break;
            case FamilyKind::gompertz: pair = gompertz_pair(n); break;
            case FamilyKind::pilehrood: break; // rejected above
        }
        rows[static_cast<std::size_t>(i)] = build_row(pair);
    });
    const RunManifest manifest =
        make_manifest("build", family, opt, describe_range(opt, 10));
    if (opt.format == "json")
        write_output(opt.out_path, json_build(manifest, rows).dump(2) + "\n");
    else
        write_output(opt.out_path, csv_build(manifest, rows));
    return 0;
}

int run_converge(const CommonOptions& opt, bool x_scale) {
    const FamilyId family = parse_family(opt.family_text);
    SweepOptions sweep;
    sweep.x = parse_x(opt.x_text);
    sweep.x_scale = x_scale;
    sweep.precision_bits = opt.precision_bits;
    const std::vector<long> ns = resolve_ns(opt, 32);
    const std::vector<SweepRow> rows = converge_sweep(family, ns, sweep);
    RunManifest manifest = make_manifest("converge", family, opt, describe_range(opt, 32));
    if (x_scale) manifest.x = opt.x_text + "*n";
    if (opt.format == "json")
        write_output(opt.out_path, json_converge(manifest, rows).dump(2) + "\n");
    else
        write_output(opt.out_path, csv_converge(manifest, rows));
    return 0;
}

int run_baseline(const CommonOptions& opt, const std::string& a_list_text,
                 const std::string& p_list_text) {
    std::vector<FamilyId> families = {{FamilyKind::euler, 0}, {FamilyKind::gompertz, 0}};
    for (long p : parse_n_list(p_list_text)) families.push_back({FamilyKind::euler_p, p});
    for (long a : parse_n_list(a_list_text)) {
        if (a < 1) throw CLI::ValidationError("--a-list", "a must be >= 1");
        families.push_back({FamilyKind::pilehrood, a});
    }
    const std::vector<long> ns = resolve_ns(opt, 32);
    const std::vector<BaselineRow> rows = baseline_table(families, ns, opt.precision_bits);
    RunManifest manifest = make_manifest("baseline", families.front(), opt,
                                         describe_range(opt, 32));
    std::string labels;
    for (std::size_t i = 0; i < families.size(); ++i)
        labels += (i ? "," : "") + families[i].label();
    manifest.family = labels;
    manifest.parameter = 0;
    if (opt.format == "json")
        write_output(opt.out_path, json_baseline(manifest, rows).dump(2) + "\n");
    else
        write_output(opt.out_path, csv_baseline(manifest, rows));
    return 0;
}

int run_verify(const std::string& suite, const CommonOptions& opt, bool family_given) {
    long n_max = opt.n_max;
    VerifyReport report;
    if (suite == "recurrence") {
        report = verify_recurrence(n_max >= 0 ? n_max : 200);
    } else if (suite == "integrality") {
        const long top = n_max >= 0 ? n_max : 300;
        report = family_given ? verify_integrality(parse_family(opt.family_text), top)
                              : verify_integrality(top);
    } else if (suite == "crosscheck") {
        report = verify_crosscheck(n_max >= 0 ? n_max : 100);
    } else if (suite == "laguerre") {
        report = verify_laguerre(n_max >= 0 ? n_max : 100);
    } else {
        throw CLI::ValidationError("suite",
                                   "expected recurrence|integrality|crosscheck|laguerre, got '" +
                                       suite + "'");
    }
    std::cout << "suite: " << suite << "\n"
              << "result: " << (report.pass ? "pass" : "FAIL") << "\n"
              << "checks_run: " << report.checks_run << "\n";
    if (!report.pass) std::cout << "first_counterexample: " << report.first_counterexample << "\n";
    for (const auto& note : report.notes) std::cout << "note: " << note << "\n";
    return report.pass ? 0 : 1;
}

} // namespace

int main(int argc, char** argv) {
    CLI::App app{"Rational approximants to gamma + ln x and exp(x) E1(x): exact construction, "
                 "verification, and convergence measurement"};
    app.set_version_flag("--version", gammadelta::kToolVersion);
    app.require_subcommand(1);

    CommonOptions opt;
    bool x_scale = false;
    std::string suite;
    std::string a_list_text = "2,3";
    std::string p_list_text = "2";
    bool family_given = false;

    auto add_common = [&](CLI::App* cmd, bool with_output) {
        cmd->add_option("--n-max", opt.n_max, "Top index n (inclusive, from 0)");
        if (with_output) {
            cmd->add_option("--n-list", opt.n_list_text, "Explicit comma-separated n values");
            cmd->add_option("--precision-bits", opt.precision_bits,
                            "Starting oracle precision in bits")
                ->check(CLI::PositiveNumber);
            cmd->add_option("--format", opt.format, "Output format")
                ->check(CLI::IsMember({"csv", "json"}));
            cmd->add_option("--out", opt.out_path, "Output path (default stdout)");
        }
    };

    CLI::App* build = app.add_subcommand("build", "Emit exact coefficient tables");
    build->add_option("--family", opt.family_text, "Family id");
    build->add_option("--x", opt.x_text, "Evaluation argument (manifest only for build)");
    add_common(build, true);

    CLI::App* verify = app.add_subcommand("verify", "Run an exact verification suite");
    verify->add_option("suite", suite, "recurrence|integrality|crosscheck|laguerre")
        ->required();
    verify->add_option("--family", opt.family_text, "Restrict integrality to one family")
        ->each([&](const std::string&) { family_given = true; });
    add_common(verify, false);

    CLI::App* converge = app.add_subcommand("converge", "Measure convergence of one family");
    converge->add_option("--family", opt.family_text, "Family id");
    converge->add_option("--x", opt.x_text, "Evaluation argument <num>[/<den>]");
    converge->add_flag("--x-scale", x_scale,
                       "Evaluate at x*n instead of fixed x (measurement columns only)");
    add_common(converge, true);

    CLI::App* baseline = app.add_subcommand("baseline", "Compare families at common n, x = 1");
    baseline->add_option("--a-list", a_list_text, "Baseline weights a (comma-separated)");
    baseline->add_option("--p-list", p_list_text, "Parametric family exponents p");
    add_common(baseline, true);

    try {
        app.parse(argc, argv);
        if (build->parsed()) return run_build(opt);
        if (verify->parsed()) return run_verify(suite, opt, family_given);
        if (converge->parsed()) return run_converge(opt, x_scale);
        if (baseline->parsed()) return run_baseline(opt, a_list_text, p_list_text);
        return 2;
    } catch (const CLI::ParseError& e) {
        app.exit(e);
        return e.get_exit_code() == 0 ? 0 : 2;
    } catch (const gammadelta::PrecisionInfeasible& e) {
        std::cerr << "precision infeasible: " << e.what() << "\n";
        return 3;
    } catch (const std::exception& e) {
        std::cerr << "error: " << e.what() << "\n";
        return 1;
    }
}
