#pragma once

// Machine-readable output: every table is emitted as CSV or JSON with an
// embedded run manifest, and reruns with equal manifests are byte-identical.
// Exact quantities are serialized as integer-fraction strings, never floats;
// measured quantities are doubles printed with "%.17g" in CSV and as JSON
// numbers in JSON (same values either way). Missing measurements are empty
// CSV fields / JSON nulls.

#include <cstdio>
#include <cstdlib>
#include <ctime>
#include <sstream>
#include <string>
#include <vector>

#include <json.hpp>

#include "analysis.hpp"
#include "euler_family.hpp"
#include "recurrence.hpp"
#include "version.hpp"

namespace gammadelta {

/// Provenance block embedded in every output file.
struct RunManifest {
    std::string command;
    std::string family;    ///< family label, or comma-joined labels
    long parameter = 0;    ///< p or a where applicable, else 0
    std::string x = "1";   ///< exact rational string
    std::string n_range;   ///< "lo..hi" or explicit comma list
    long precision_bits = 256;
    std::string output_format = "csv";
    std::string tool_version = kToolVersion;
    std::string timestamp;
};

/// UTC ISO-8601 timestamp; honors SOURCE_DATE_EPOCH for reproducible output.
inline std::string manifest_timestamp() {
    std::time_t t = std::time(nullptr);
    if (const char* epoch = std::getenv("SOURCE_DATE_EPOCH")) {
        char* end = nullptr;
        const long long parsed = std::strtoll(epoch, &end, 10);
        if (end != epoch && *end == '\0') t = static_cast<std::time_t>(parsed);
    }
    std::tm tm_utc{};
    gmtime_r(&t, &tm_utc);
    char buf[32];
    std::strftime(buf, sizeof buf, "%Y-%m-%dT%H:%M:%SZ", &tm_utc);
    return buf;
}

inline nlohmann::ordered_json manifest_json(const RunManifest& m) {
    nlohmann::ordered_json j;
    j["command"] = m.command;
    j["family"] = m.family;
    j["parameter"] = m.parameter;
    j["x"] = m.x;
    j["n_range"] = m.n_range;
    j["precision_bits"] = m.precision_bits;
    j["output_format"] = m.output_format;
    j["tool_version"] = m.tool_version;
    j["timestamp"] = m.timestamp;
    return j;
}

inline std::string format_double(double v) {
    char buf[64];
    std::snprintf(buf, sizeof buf, "%.17g", v);
    return buf;
}

/// One exact-coefficient table row: ascending coefficients as fraction strings.
struct BuildRow {
    long n = 0;
    std::vector<std::string> f1_coeffs;
    std::vector<std::string> f2_coeffs;
};

inline BuildRow build_row(const ApproximantPair& pair) {
    return {pair.n, pair.numerator.coefficient_strings(), pair.denominator.coefficient_strings()};
}

namespace detail {

inline std::string join(const std::vector<std::string>& parts, char sep) {
    std::string out;
    for (std::size_t i = 0; i < parts.size(); ++i) {
        if (i) out.push_back(sep);
        out += parts[i];
    }
    return out;
}

inline std::string csv_header_line(const RunManifest& m) {
    return "# manifest: " + manifest_json(m).dump() + "\n";
}

} // namespace detail

// ---- build tables: columns n, F1_coeffs, F2_coeffs -------------------------

inline std::string csv_build(const RunManifest& m, const std::vector<BuildRow>& rows) {
    std::ostringstream out;
    out << detail::csv_header_line(m) << "n,F1_coeffs,F2_coeffs\n";
    for (const BuildRow& r : rows)
        out << r.n << ',' << detail::join(r.f1_coeffs, ';') << ','
            << detail::join(r.f2_coeffs, ';') << '\n';
    return out.str();
}

inline nlohmann::ordered_json json_build(const RunManifest& m, const std::vector<BuildRow>& rows) {
    nlohmann::ordered_json j;
    j["manifest"] = manifest_json(m);
    j["rows"] = nlohmann::ordered_json::array();
    for (const BuildRow& r : rows) {
        nlohmann::ordered_json row;
        row["n"] = r.n;
        row["F1_coeffs"] = r.f1_coeffs;
        row["F2_coeffs"] = r.f2_coeffs;
        j["rows"].push_back(std::move(row));
    }
    return j;
}

// ---- converge tables: columns n, log_denom, log_abs_error, slope_predicted,
//      slope_gap, r_measured ------------------------------------------------

inline std::string csv_converge(const RunManifest& m, const std::vector<SweepRow>& rows) {
    std::ostringstream out;
    out << detail::csv_header_line(m)
        << "n,log_denom,log_abs_error,slope_predicted,slope_gap,r_measured\n";
    for (const SweepRow& r : rows) {
        out << r.n << ',' << format_double(r.log_denom) << ',' << format_double(r.log_abs_error)
            << ',';
        if (r.has_slope) out << format_double(r.slope_predicted);
        out << ',';
        if (r.has_slope) out << format_double(r.slope_gap);
        out << ',';
        if (r.has_r) out << format_double(r.r_measured);
        out << '\n';
    }
    return out.str();
}

inline nlohmann::ordered_json json_converge(const RunManifest& m,
                                            const std::vector<SweepRow>& rows) {
    nlohmann::ordered_json j;
    j["manifest"] = manifest_json(m);
    j["rows"] = nlohmann::ordered_json::array();
    for (const SweepRow& r : rows) {
        nlohmann::ordered_json row;
        row["n"] = r.n;
        row["log_denom"] = r.log_denom;
        row["log_abs_error"] = r.log_abs_error;
        row["slope_predicted"] =
            r.has_slope ? nlohmann::ordered_json(r.slope_predicted) : nlohmann::ordered_json();
        row["slope_gap"] =
            r.has_slope ? nlohmann::ordered_json(r.slope_gap) : nlohmann::ordered_json();
        row["r_measured"] =
            r.has_r ? nlohmann::ordered_json(r.r_measured) : nlohmann::ordered_json();
        j["rows"].push_back(std::move(row));
    }
    return j;
}

// ---- baseline tables: columns family, n, log_denom, log_abs_error,
//      r_measured -------------------------------------------------------------

inline std::string csv_baseline(const RunManifest& m, const std::vector<BaselineRow>& rows) {
    std::ostringstream out;
    out << detail::csv_header_line(m) << "family,n,log_denom,log_abs_error,r_measured\n";
    for (const BaselineRow& r : rows) {
        out << r.family << ',' << r.n << ',' << format_double(r.log_denom) << ','
            << format_double(r.log_abs_error) << ',';
        if (r.has_r) out << format_double(r.r_measured);
        out << '\n';
    }
    return out.str();
}

inline nlohmann::ordered_json json_baseline(const RunManifest& m,
                                            const std::vector<BaselineRow>& rows) {
    nlohmann::ordered_json j;
    j["manifest"] = manifest_json(m);
    j["rows"] = nlohmann::ordered_json::array();
    for (const BaselineRow& r : rows) {
        nlohmann::ordered_json row;
        row["family"] = r.family;
        row["n"] = r.n;
        row["log_denom"] = r.log_denom;
        row["log_abs_error"] = r.log_abs_error;
        row["r_measured"] =
            r.has_r ? nlohmann::ordered_json(r.r_measured) : nlohmann::ordered_json();
        j["rows"].push_back(std::move(row));
    }
    return j;
}

// ---- recurrence table export ------------------------------------------------

inline nlohmann::ordered_json recurrence_spec_json(const RecurrenceSpec& spec) {
    nlohmann::ordered_json j;
    j["family"] = spec.family_label;
    j["order"] = 4;
    j["coefficient_degree"] = 8;
    j["characteristic_limit"] = spec.characteristic_target;
    j["coefficients"] = nlohmann::ordered_json::array();
    for (std::size_t idx = 0; idx < spec.coeff.size(); ++idx) {
        const FactoredCoefficient& c = spec.coeff[idx];
        nlohmann::ordered_json entry;
        entry["index"] = idx;
        entry["sign"] = c.sign;
        entry["linear_factors"] = nlohmann::ordered_json::array();
        for (const auto& [shift, exp] : c.linear_factors) {
            nlohmann::ordered_json f;
            f["shift"] = shift;
            f["exponent"] = exp;
            entry["linear_factors"].push_back(std::move(f));
        }
        entry["core_ascending"] = nlohmann::ordered_json::array();
        for (const BigInt& v : c.core) entry["core_ascending"].push_back(v.get_str());
        entry["expanded_ascending"] = nlohmann::ordered_json::array();
        for (const BigInt& v : c.expanded()) entry["expanded_ascending"].push_back(v.get_str());
        j["coefficients"].push_back(std::move(entry));
    }
    return j;
}

/// Both embedded five-term recurrence tables (coefficients in n, valid at
/// x = 1), in the same shape as the shipped data file.
inline nlohmann::ordered_json recurrence_table_json() {
    nlohmann::ordered_json j;
    j["description"] =
        "Order-4 (five-term) recurrences in n, with degree-8 integer polynomial "
        "coefficients, satisfied at x = 1 by the numerator and denominator "
        "sequences of both approximant families. Coefficients are given factored "
        "(sign, linear factors (n+shift)^exponent, residual core in ascending "
        "powers of n) and fully expanded in ascending powers of n.";
    j["recurrences"] = nlohmann::ordered_json::array();
    j["recurrences"].push_back(recurrence_spec_json(euler_recurrence()));
    j["recurrences"].push_back(recurrence_spec_json(gompertz_recurrence()));
    return j;
}

} // namespace gammadelta
