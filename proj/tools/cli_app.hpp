#pragma once

#include <cmath>
#include <cstdint>
#include <cstdio>
#include <numbers>
#include <optional>
#include <ostream>
#include <string>
#include <vector>

#include "CLI11.hpp"
#include "json.hpp"

#include "cusa/cusa.hpp"
#include "cusa/report_io.hpp"

namespace cusa::cli {

enum class Format { Text, Json, Csv };

struct RunConfig {
    Format format = Format::Text;
    std::size_t points = 2000;
    std::uint64_t seed = 20130515;
    double tolerance = 1e-12;
    bool points_given = false;
};

inline constexpr int kExitOk = 0;
inline constexpr int kExitViolation = 1;
inline constexpr int kExitUsage = 2;

inline constexpr std::size_t kPairCount = 1000;

struct UsageError : std::runtime_error {
    using std::runtime_error::runtime_error;
};

namespace detail {

struct NamedValue {
    std::string name;
    double value;
};

inline std::string short_real(double v)
{
    char buf[32];
    std::snprintf(buf, sizeof buf, "%.6g", v);
    return buf;
}

inline void emit_values(std::ostream& out, Format f, const std::vector<NamedValue>& rows)
{
    if (f == Format::Json) {
        nlohmann::ordered_json j;
        for (const auto& r : rows) j[r.name] = cusa::detail::real_to_json(r.value);
        out << j.dump(2) << '\n';
    } else if (f == Format::Csv) {
        out << "name,value\n";
        for (const auto& r : rows) out << r.name << ',' << format_real(r.value) << '\n';
    } else {
        for (const auto& r : rows) {
            char buf[160];
            std::snprintf(buf, sizeof buf, "%-22s %-14s %s", r.name.c_str(), short_real(r.value).c_str(),
                          format_real(r.value).c_str());
            out << buf << '\n';
        }
    }
}

inline int cmd_constants(const RunConfig& cfg, std::ostream& out)
{
    const SharpConstant p0 = solve_p0(cfg.tolerance);
    const SharpConstant one = p1();
    const QuarticBound at_p1 = quartic_constants(BoundParam::trig(one.value));
    const QuarticBound at_p0 = quartic_constants(BoundParam::trig(p0.value));
    const Enclosure g = catalan_enclosure();
    const Enclosure psi = trigamma_half_enclosure();
    emit_values(out, cfg.format,
                {{"p0", p0.value},
                 {"p0_radius", p0.certified_radius},
                 {"p1", one.value},
                 {"c0(p1)", at_p1.c_lo},
                 {"c1(p0)", at_p0.c_hi},
                 {"leibniz_ratio_bound", kLeibnizRatioBound},
                 {"sb_ratio_at_b_eq_2a", (11.0 + 8.0 * std::numbers::sqrt2) / 27.0},
                 {"catalan_lo", g.lo},
                 {"catalan_hi", g.hi},
                 {"trigamma_half_lo", psi.lo},
                 {"trigamma_half_hi", psi.hi}});
    return kExitOk;
}

struct EvalArgs {
    std::string fn = "U";
    double p = 1.0;
    double x = 1.0;
};

inline int cmd_eval(const RunConfig& cfg, const EvalArgs& a, std::ostream& out)
{
    std::vector<NamedValue> rows{{"p", a.p}, {"x", a.x}};
    if (a.fn == "sinc") {
        rows.push_back({"value", sinc(a.x)});
    } else if (a.fn == "sinhc") {
        rows.push_back({"value", sinhc(a.x)});
    } else if (a.fn == "U") {
        rows.push_back({"value", u_bound(BoundParam::trig(a.p), a.x)});
    } else if (a.fn == "V") {
        rows.push_back({"value", v_bound(BoundParam::hyperbolic(a.p), a.x)});
    } else if (a.fn == "F" || a.fn == "G") {
        const GapEvaluation g =
            a.fn == "F" ? gap_trig(BoundParam::trig(a.p), a.x) : gap_hyp(BoundParam::hyperbolic(a.p), a.x);
        rows.push_back({"value", g.value});
        rows.push_back({"series", g.method == GapMethod::Series ? 1.0 : 0.0});
        rows.push_back({"tail_bound", g.tail_bound});
    } else if (a.fn == "geo_trig") {
        rows.push_back({"value", geometric_bound_trig(a.p, a.x)});
    } else if (a.fn == "geo_hyp") {
        rows.push_back({"value", geometric_bound_hyp(a.p, a.x)});
    } else if (a.fn == "D") {
        rows.push_back({"value", lower_bound_comparison(a.x)});
    } else {
        throw UsageError("unknown function " + a.fn);
    }
    emit_values(out, cfg.format, rows);
    return kExitOk;
}

inline void emit_reports(std::ostream& out, Format f, const std::vector<VerificationReport>& reports)
{
    if (f == Format::Json)
        out << to_json(reports).dump(2) << '\n';
    else if (f == Format::Csv)
        write_csv(out, reports);
    else
        write_text(out, reports);
}

inline int cmd_verify(const RunConfig& cfg, Suite suite, std::optional<double> inject_lower, std::ostream& out)
{
    if (cfg.points < kMinGridPoints) throw UsageError("--points must be at least 64 for verify");
    std::vector<InequalityCase> cases = suite_cases(suite);
    if (inject_lower) cases.push_back(injected_lower_case(*inject_lower));
    std::vector<VerificationReport> reports;
    for (const auto& c : cases) reports.push_back(verify(c, cfg.points));
    if (suite == Suite::All || suite == Suite::Propositions) {
        for (auto& r : pair_checks(cfg.seed, kPairCount)) reports.push_back(std::move(r));
    }
    emit_reports(out, cfg.format, reports);
    return all_hold(reports) ? kExitOk : kExitViolation;
}

struct TableArgs {
    std::string chain = "M1c";
    std::optional<double> xmax;
    double a = 1.0;
    double b = 4.0;
};

inline void emit_table(std::ostream& out, Format f, const std::vector<std::string>& header,
                       const std::vector<std::vector<double>>& rows)
{
    if (f == Format::Json) {
        nlohmann::ordered_json a = nlohmann::ordered_json::array();
        for (const auto& row : rows) {
            nlohmann::ordered_json j;
            for (std::size_t i = 0; i < header.size(); ++i) j[header[i]] = cusa::detail::real_to_json(row[i]);
            a.push_back(std::move(j));
        }
        out << a.dump(2) << '\n';
        return;
    }
    for (std::size_t i = 0; i < header.size(); ++i) out << (i ? "," : "") << cusa::detail::csv_field(header[i]);
    out << '\n';
    for (const auto& row : rows) {
        for (std::size_t i = 0; i < row.size(); ++i) out << (i ? "," : "") << format_real(row[i]);
        out << '\n';
    }
}

// Appends the adjacent differences of values[first..] to the row.
inline void append_margins(std::vector<double>& row, std::size_t first)
{
    const std::size_t n = row.size();
    for (std::size_t i = first; i + 1 < n; ++i) row.push_back(row[i + 1] - row[i]);
}

inline int cmd_table(const RunConfig& cfg, const TableArgs& t, std::ostream& out)
{
    const std::size_t rows_wanted = cfg.points_given ? cfg.points : 9;
    if (rows_wanted < 2) throw UsageError("--points must be at least 2 for table");
    std::vector<std::string> header;
    std::vector<std::vector<double>> rows;

    if (t.chain == "MeanChain") {
        const MeanPoint m(t.a, t.b);
        const auto members = mean_chain(m);
        header = {"a", "b"};
        for (const auto& mm : members) header.push_back(mm.name);
        for (std::size_t i = 0; i + 1 < members.size(); ++i) header.push_back("d" + std::to_string(i + 1));
        std::vector<double> row{t.a, t.b};
        for (const auto& mm : members) row.push_back(mm.value);
        append_margins(row, 2);
        rows.push_back(std::move(row));
        emit_table(out, cfg.format, header, rows);
        return kExitOk;
    }

    std::vector<Evaluable> members;
    double xmax = 0.0;
    if (t.chain == "M1c") {
        members = m1c_members();
        xmax = t.xmax.value_or(std::numbers::pi / 2.0);
        if (!(xmax > 0.0 && xmax <= std::numbers::pi / 2.0)) throw UsageError("--xmax must lie in (0, pi/2] for M1c");
    } else if (t.chain == "M2c") {
        members = m2c_members();
        xmax = t.xmax.value_or(20.0);
        if (!(xmax > 0.0 && xmax <= kHyperbolicDomainEnd)) throw UsageError("--xmax must lie in (0, 50] for M2c");
    } else {
        throw UsageError("unknown chain " + t.chain);
    }
    header = {"x"};
    for (const auto& m : members) header.push_back(m.name);
    for (std::size_t i = 0; i + 1 < members.size(); ++i) header.push_back("d" + std::to_string(i + 1));
    for (std::size_t i = 0; i < rows_wanted; ++i) {
        const double x = xmax * double(i) / double(rows_wanted - 1);
        std::vector<double> row{x};
        for (const auto& m : members) row.push_back(m.eval(x));
        append_margins(row, 1);
        rows.push_back(std::move(row));
    }
    emit_table(out, cfg.format, header, rows);
    return kExitOk;
}

struct SpecialArgs {
    std::string name;
    std::vector<double> args;
    std::optional<double> p;
};

inline double arg_or(const SpecialArgs& s, std::size_t i, double fallback)
{
    return i < s.args.size() ? s.args[i] : fallback;
}

inline int cmd_special(const RunConfig& cfg, const SpecialArgs& s, std::ostream& out)
{
    std::vector<NamedValue> rows;
    bool contained = false;
    const double inf = std::numeric_limits<double>::infinity();
    auto enclose = [&](const Enclosure& e, double reference) {
        rows.push_back({"lo", e.lo});
        rows.push_back({"hi", e.hi});
        rows.push_back({"reference", reference});
        contained = e.contains(reference);
    };
    try {
        if (s.name == "Si") {
            const double t = arg_or(s, 0, std::numbers::pi / 2.0);
            const double p = s.p.value_or(2.0 / 3.0);
            rows.push_back({"t", t});
            rows.push_back({"p", p});
            enclose(si_enclosure(t, BoundParam::trig(p)), si_reference(t).value);
        } else if (s.name == "Sh") {
            const double t = arg_or(s, 0, 1.0);
            rows.push_back({"t", t});
            enclose(sh_enclosure(t), sh_reference(t).value);
        } else if (s.name == "TrigammaHalf") {
            enclose(trigamma_half_enclosure(), std::numbers::pi * std::numbers::pi / 2.0);
        } else if (s.name == "Catalan") {
            enclose(catalan_enclosure(), catalan_reference(100000));
        } else if (s.name == "SB") {
            if (s.args.size() != 2) throw UsageError("SB takes two arguments a b");
            const MeanPoint m(s.args[0], s.args[1]);
            const StableDifference gap = sb_lower_bound_gap(m);
            rows.push_back({"a", m.a()});
            rows.push_back({"b", m.b()});
            rows.push_back({"lo", sb_lower_bound(m)});
            rows.push_back({"hi", inf});
            rows.push_back({"reference", sb_mean(m)});
            rows.push_back({"gap", gap.value});
            contained = gap.value >= -gap.error;
        } else if (s.name == "LogMean") {
            if (s.args.size() != 2) throw UsageError("LogMean takes two arguments a b");
            const MeanPoint m(s.args[0], s.args[1]);
            rows.push_back({"a", m.a()});
            rows.push_back({"b", m.b()});
            enclose(log_mean_sandwich(m), log_mean(m));
        } else {
            throw UsageError("unknown special " + s.name);
        }
    } catch (const std::domain_error& e) {
        throw UsageError(e.what());
    } catch (const std::out_of_range& e) {
        throw UsageError(e.what());
    }
    rows.push_back({"contained", contained ? 1.0 : 0.0});
    emit_values(out, cfg.format, rows);
    return contained ? kExitOk : kExitViolation;
}

}  // namespace detail

/**
 * Parses argv and runs one subcommand.  Exit codes: 0 all verified,
 * 1 violation or inconclusive, 2 usage error.
 */
inline int run_cli(int argc, const char* const* argv, std::ostream& out, std::ostream& err)
{
    CLI::App app{"Certified Cusa-Huygens type bounds: constants, evaluation and verification", "cusa"};
    app.require_subcommand(1);

    RunConfig cfg;
    std::string format = "text";
    app.option_defaults()->always_capture_default();
    auto* points_opt = app.add_option("--points", cfg.points, "Grid points (verify) or table rows")
                           ->check(CLI::Range(std::size_t{2}, std::size_t{100'000'000}));
    app.add_option("--seed", cfg.seed, "Seed for random mean pairs");
    app.add_option("--tol", cfg.tolerance, "Root tolerance for p0")->check(CLI::Range(1e-15, 1e-3));
    app.add_option("--format", format, "Output format")->check(CLI::IsMember({"text", "json", "csv"}));
    app.fallthrough();

    auto* constants = app.add_subcommand("constants", "Sharp constants and closed-form enclosures");

    detail::EvalArgs eval_args;
    auto* eval = app.add_subcommand("eval", "Evaluate one bound function");
    eval->add_option("--fn", eval_args.fn, "sinc|sinhc|U|V|F|G|geo_trig|geo_hyp|D")
        ->check(CLI::IsMember({"sinc", "sinhc", "U", "V", "F", "G", "geo_trig", "geo_hyp", "D"}));
    eval->add_option("--p", eval_args.p, "Family parameter");
    eval->add_option("--x", eval_args.x, "Abscissa");

    std::string suite_name = "All";
    double inject = 0.0;
    auto* verify_cmd = app.add_subcommand("verify", "Run the registered inequality corpus");
    verify_cmd->add_option("--suite", suite_name, "All|Theorem1|Theorem2|Chains|Propositions|Remarks")
        ->check(CLI::IsMember({"All", "Theorem1", "Theorem2", "Chains", "Propositions", "Remarks"}));
    auto* inject_opt =
        verify_cmd->add_option("--inject-lower", inject, "Add a trigonometric lower-bound case at this p");

    detail::TableArgs table_args;
    double xmax = 0.0;
    auto* table = app.add_subcommand("table", "Tabulate a chain of inequalities");
    table->add_option("--chain", table_args.chain, "M1c|M2c|MeanChain")
        ->check(CLI::IsMember({"M1c", "M2c", "MeanChain"}));
    auto* xmax_opt = table->add_option("--xmax", xmax, "Right end of the x range");
    table->add_option("--a", table_args.a, "First mean argument (MeanChain)");
    table->add_option("--b", table_args.b, "Second mean argument (MeanChain)");

    detail::SpecialArgs special_args;
    auto* special = app.add_subcommand("special", "Enclosure against its reference value");
    special->add_option("name", special_args.name, "Si|Sh|TrigammaHalf|Catalan|SB|LogMean")
        ->required()
        ->check(CLI::IsMember({"Si", "Sh", "TrigammaHalf", "Catalan", "SB", "LogMean"}));
    special->add_option("args", special_args.args, "Numeric arguments");
    double special_p = 0.0;
    auto* special_p_opt = special->add_option("--p", special_p, "Family parameter for Si");

    try {
        app.parse(argc, argv);
    } catch (const CLI::CallForHelp& e) {
        return app.exit(e, out, err);
    } catch (const CLI::CallForAllHelp& e) {
        return app.exit(e, out, err);
    } catch (const CLI::ParseError& e) {
        app.exit(e, out, err);
        return kExitUsage;
    }

    cfg.format = format == "json" ? Format::Json : format == "csv" ? Format::Csv : Format::Text;
    cfg.points_given = points_opt->count() > 0;
    if (*xmax_opt) table_args.xmax = xmax;
    if (*special_p_opt) special_args.p = special_p;

    try {
        if (*constants) return detail::cmd_constants(cfg, out);
        if (*eval) return detail::cmd_eval(cfg, eval_args, out);
        if (*verify_cmd) {
            std::optional<double> injected;
            if (*inject_opt) injected = inject;
            return detail::cmd_verify(cfg, *suite_from_string(suite_name), injected, out);
        }
        if (*table) return detail::cmd_table(cfg, table_args, out);
        if (*special) return detail::cmd_special(cfg, special_args, out);
    } catch (const UsageError& e) {
        err << "error: " << e.what() << '\n';
        return kExitUsage;
    } catch (const std::domain_error& e) {
        err << "error: " << e.what() << '\n';
        return kExitUsage;
    } catch (const std::invalid_argument& e) {
        err << "error: " << e.what() << '\n';
        return kExitUsage;
    } catch (const std::out_of_range& e) {
        err << "error: " << e.what() << '\n';
        return kExitUsage;
    } catch (const std::overflow_error& e) {
        // the requested point lies beyond double range
        err << "error: " << e.what() << '\n';
        return kExitUsage;
    }
    return kExitUsage;
}

}  // namespace cusa::cli
