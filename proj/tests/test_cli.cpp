#include <sstream>
#include <string>
#include <vector>

#include <gtest/gtest.h>

#include "cli_app.hpp"
#include "cusa/report_io.hpp"

namespace {

struct CliRun {
    int code;
    std::string out;
    std::string err;
};

CliRun run(std::vector<std::string> args)
{
    args.insert(args.begin(), "cusa");
    std::vector<const char*> argv;
    for (const auto& a : args) argv.push_back(a.c_str());
    std::ostringstream out, err;
    const int code = cusa::cli::run_cli(int(argv.size()), argv.data(), out, err);
    return {code, out.str(), err.str()};
}

std::vector<std::vector<std::string>> parse_csv(const std::string& text)
{
    std::vector<std::vector<std::string>> rows;
    std::istringstream in(text);
    std::string line;
    while (std::getline(in, line)) {
        std::vector<std::string> row;
        std::istringstream ls(line);
        std::string cell;
        while (std::getline(ls, cell, ',')) row.push_back(cell);
        rows.push_back(row);
    }
    return rows;
}

}  // namespace

TEST(Cli, ConstantsText)
{
    const CliRun r = run({"constants"});
    EXPECT_EQ(r.code, 0);
    EXPECT_NE(r.out.find("0.770861"), std::string::npos) << r.out;
    EXPECT_NE(r.out.find("0.774597"), std::string::npos);
    EXPECT_NE(r.out.find("0.826434"), std::string::npos);
}

TEST(Cli, ConstantsJson)
{
    const CliRun r = run({"--format", "json", "constants"});
    ASSERT_EQ(r.code, 0);
    const auto j = nlohmann::json::parse(r.out);
    EXPECT_NEAR(j.at("p0").get<double>(), 0.77086074112686702, 1e-11);
    EXPECT_NEAR(j.at("c0(p1)").get<double>(), -7.2618e-5, 5e-9);
}

TEST(Cli, EvalFunctions)
{
    const CliRun r = run({"--format", "csv", "eval", "--fn", "U", "--p", "1", "--x", "1.5707963267948966"});
    ASSERT_EQ(r.code, 0);
    const auto rows = parse_csv(r.out);
    ASSERT_EQ(rows.back()[0], "value");
    EXPECT_NEAR(std::stod(rows.back()[1]), 2.0 / 3.0, 1e-15);
    EXPECT_EQ(run({"eval", "--fn", "nope"}).code, 2);
    EXPECT_EQ(run({"eval", "--fn", "U", "--p", "2"}).code, 2);
    EXPECT_EQ(run({"eval", "--fn", "sinhc", "--x", "1000"}).code, 2);
}

TEST(Cli, VerifyAllHolds)
{
    const CliRun r = run({"verify", "--points", "500"});
    EXPECT_EQ(r.code, 0) << r.out;
    EXPECT_EQ(r.out.find("[Fails]"), std::string::npos);
}

TEST(Cli, VerifyInjectedFailure)
{
    const CliRun r = run({"--format", "json", "verify", "--suite", "Theorem1", "--inject-lower", "0.78"});
    EXPECT_EQ(r.code, 1);
    const auto reports = cusa::reports_from_json(nlohmann::ordered_json::parse(r.out));
    const auto& last = reports.back();
    EXPECT_EQ(last.verdict, cusa::Verdict::Fails);
    EXPECT_NEAR(last.argmin_x, 1.5707963267948966, 1e-3);
    EXPECT_NEAR(last.violations.back().x, 1.5707963267948966, 1e-3);
}

TEST(Cli, JsonRoundTripIsExact)
{
    const CliRun r = run({"--format", "json", "verify", "--suite", "Theorem2", "--points", "300"});
    ASSERT_EQ(r.code, 0);
    const auto j = nlohmann::ordered_json::parse(r.out);
    const auto reports = cusa::reports_from_json(j);
    EXPECT_EQ(cusa::to_json(reports).dump(2) + "\n", r.out);
    const auto again = cusa::reports_from_json(nlohmann::ordered_json::parse(cusa::to_json(reports).dump()));
    EXPECT_EQ(again, reports);
}

TEST(Cli, CsvCarriesFullPrecision)
{
    const auto report = cusa::verify(cusa::m1_lower_case(0.78), 200);
    std::ostringstream os;
    cusa::write_csv(os, {report});
    const auto rows = parse_csv(os.str());
    ASSERT_EQ(rows.size(), 2u);
    EXPECT_EQ(std::stod(rows[1][3]), report.min_margin);
    EXPECT_EQ(std::stod(rows[1][4]), report.argmin_x);
    EXPECT_EQ(rows[1][1], "Fails");
}

TEST(Cli, Deterministic)
{
    EXPECT_EQ(run({"verify", "--suite", "Chains", "--points", "400"}).out,
              run({"verify", "--suite", "Chains", "--points", "400"}).out);
    EXPECT_EQ(run({"--seed", "9", "verify", "--suite", "Propositions", "--points", "200"}).out,
              run({"--seed", "9", "verify", "--suite", "Propositions", "--points", "200"}).out);
}

TEST(Cli, TableM1cRowsIncrease)
{
    const CliRun r = run({"table", "--chain", "M1c", "--xmax", "1", "--points", "5"});
    ASSERT_EQ(r.code, 0);
    const auto rows = parse_csv(r.out);
    ASSERT_EQ(rows.size(), 6u);
    EXPECT_EQ(rows[0][0], "x");
    EXPECT_EQ(rows[0].size(), 1u + 9u + 8u);
    EXPECT_EQ(std::stod(rows.back()[0]), 1.0);
    for (std::size_t i = 1; i + 1 < 10; ++i) EXPECT_LT(std::stod(rows.back()[i]), std::stod(rows.back()[i + 1]));
    for (std::size_t i = 1; i < 10; ++i) EXPECT_EQ(std::stod(rows[1][i]), 1.0);
}

TEST(Cli, TableM2cDefaults)
{
    const CliRun r = run({"--format", "json", "table", "--chain", "M2c"});
    ASSERT_EQ(r.code, 0);
    const auto j = nlohmann::json::parse(r.out);
    ASSERT_EQ(j.size(), 9u);
    EXPECT_EQ(j.back().at("x").get<double>(), 20.0);
    EXPECT_GT(j.back().at("d7").get<double>(), 0.0);
    EXPECT_EQ(run({"table", "--chain", "M2c", "--xmax", "60"}).code, 2);
    EXPECT_EQ(run({"table", "--chain", "Other"}).code, 2);
}

TEST(Cli, TableMeanChain)
{
    const CliRun r = run({"table", "--chain", "MeanChain"});
    ASSERT_EQ(r.code, 0);
    const auto rows = parse_csv(r.out);
    ASSERT_EQ(rows.size(), 2u);
    EXPECT_EQ(rows[0][7], "L");
    EXPECT_NEAR(std::stod(rows[1][7]), 2.1640425613334451, 1e-15);
    for (std::size_t i = 2; i + 1 < 10; ++i) EXPECT_LT(std::stod(rows[1][i]), std::stod(rows[1][i + 1]));
}

TEST(Cli, SpecialEnclosures)
{
    for (std::vector<std::string> args : {std::vector<std::string>{"special", "Si"},
                                          {"special", "Si", "1", "--p", "0"},
                                          {"special", "Sh", "3"},
                                          {"special", "TrigammaHalf"},
                                          {"special", "Catalan"},
                                          {"special", "SB", "1", "4"},
                                          {"special", "LogMean", "1", "4"}}) {
        const CliRun r = run(args);
        EXPECT_EQ(r.code, 0) << args[1] << '\n' << r.out << r.err;
        EXPECT_NE(r.out.find("contained"), std::string::npos);
    }
    EXPECT_EQ(run({"special", "SB", "1"}).code, 2);
    EXPECT_EQ(run({"special", "Si", "3"}).code, 2);
    EXPECT_EQ(run({"special", "Nope"}).code, 2);
}

TEST(Cli, UsageErrors)
{
    EXPECT_EQ(run({}).code, 2);
    EXPECT_EQ(run({"frobnicate"}).code, 2);
    EXPECT_EQ(run({"--format", "xml", "constants"}).code, 2);
    EXPECT_EQ(run({"--tol", "1", "constants"}).code, 2);
    EXPECT_EQ(run({"verify", "--points", "10"}).code, 2);
    EXPECT_EQ(run({"verify", "--suite", "Bogus"}).code, 2);
    EXPECT_EQ(run({"--help"}).code, 0);
}
