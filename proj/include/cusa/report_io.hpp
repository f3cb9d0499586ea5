#pragma once

#include <cmath>
#include <cstdio>
#include <limits>
#include <ostream>
#include <stdexcept>
#include <string>
#include <vector>

#include "json.hpp"

#include "cusa/enclosure.hpp"
#include "cusa/verifier.hpp"

namespace cusa {

/// %.17g, which round-trips every finite double.
[[nodiscard]] inline std::string format_real(double v)
{
    if (std::isnan(v)) return "nan";
    if (std::isinf(v)) return v > 0 ? "inf" : "-inf";
    char buf[40];
    std::snprintf(buf, sizeof buf, "%.17g", v);
    return buf;
}

namespace detail {

inline nlohmann::ordered_json real_to_json(double v)
{
    if (std::isfinite(v)) return v;
    return nullptr;  // only min_margin of an empty report is non-finite
}

inline double real_from_json(const nlohmann::ordered_json& j)
{
    if (j.is_null()) return std::numeric_limits<double>::infinity();
    return j.get<double>();
}

inline std::string csv_field(const std::string& s)
{
    if (s.find_first_of(",\"\n") == std::string::npos) return s;
    std::string out = "\"";
    for (char c : s) {
        if (c == '"') out += '"';
        out += c;
    }
    return out + "\"";
}

}  // namespace detail

[[nodiscard]] inline nlohmann::ordered_json to_json(const VerificationReport& r)
{
    nlohmann::ordered_json j;
    j["case_id"] = r.case_id;
    j["verdict"] = to_string(r.verdict);
    j["grid_points"] = r.grid_points;
    j["min_margin"] = detail::real_to_json(r.min_margin);
    j["argmin_x"] = r.argmin_x;
    j["violation_count"] = r.violation_count;
    nlohmann::ordered_json v = nlohmann::ordered_json::array();
    for (const Violation& x : r.violations) {
        nlohmann::ordered_json e;
        e["x"] = x.x;
        e["lhs"] = x.lhs;
        e["rhs"] = x.rhs;
        v.push_back(std::move(e));
    }
    j["violations"] = std::move(v);
    j["diagnostic"] = r.diagnostic;
    return j;
}

[[nodiscard]] inline VerificationReport report_from_json(const nlohmann::ordered_json& j)
{
    VerificationReport r;
    r.case_id = j.at("case_id").get<std::string>();
    const auto verdict = verdict_from_string(j.at("verdict").get<std::string>());
    if (!verdict) throw std::invalid_argument("report_from_json: unknown verdict");
    r.verdict = *verdict;
    r.grid_points = j.at("grid_points").get<std::size_t>();
    r.min_margin = detail::real_from_json(j.at("min_margin"));
    r.argmin_x = j.at("argmin_x").get<double>();
    r.violation_count = j.at("violation_count").get<std::size_t>();
    for (const auto& e : j.at("violations"))
        r.violations.push_back({e.at("x").get<double>(), e.at("lhs").get<double>(), e.at("rhs").get<double>()});
    r.diagnostic = j.at("diagnostic").get<std::string>();
    return r;
}

[[nodiscard]] inline nlohmann::ordered_json to_json(const std::vector<VerificationReport>& reports)
{
    nlohmann::ordered_json a = nlohmann::ordered_json::array();
    for (const auto& r : reports) a.push_back(to_json(r));
    return a;
}

[[nodiscard]] inline std::vector<VerificationReport> reports_from_json(const nlohmann::ordered_json& j)
{
    std::vector<VerificationReport> out;
    for (const auto& e : j) out.push_back(report_from_json(e));
    return out;
}

inline constexpr const char* kReportCsvHeader =
    "case_id,verdict,grid_points,min_margin,argmin_x,violation_count,first_violation_x";

inline void write_csv(std::ostream& os, const std::vector<VerificationReport>& reports)
{
    os << kReportCsvHeader << '\n';
    for (const auto& r : reports) {
        os << detail::csv_field(r.case_id) << ',' << to_string(r.verdict) << ',' << r.grid_points << ','
           << format_real(r.min_margin) << ',' << format_real(r.argmin_x) << ',' << r.violation_count << ','
           << (r.violations.empty() ? std::string() : format_real(r.violations.front().x)) << '\n';
    }
}

inline void write_text(std::ostream& os, const VerificationReport& r)
{
    os << "[" << to_string(r.verdict) << "] " << r.case_id << "  points=" << r.grid_points
       << "  min_margin=" << format_real(r.min_margin) << " at x=" << format_real(r.argmin_x);
    if (r.violation_count > 0) {
        os << "  violations=" << r.violation_count << " first at x=" << format_real(r.violations.front().x);
    }
    if (!r.diagnostic.empty()) os << "  (" << r.diagnostic << ")";
    os << '\n';
}

inline void write_text(std::ostream& os, const std::vector<VerificationReport>& reports)
{
    for (const auto& r : reports) write_text(os, r);
}

[[nodiscard]] inline nlohmann::ordered_json to_json(const Enclosure& e)
{
    nlohmann::ordered_json j;
    j["lo"] = e.lo;
    j["hi"] = e.hi;
    return j;
}

}  // namespace cusa
