#include <gtest/gtest.h>

#include <sstream>
#include <string>
#include <vector>

#include <json.hpp>

#include "fqg/cli.hpp"

namespace fqg {
namespace {

struct Outcome {
    int code;
    std::string out;
    std::string err;
};

Outcome run_cli(std::vector<std::string> args) {
    args.insert(args.begin(), "fqg");
    std::vector<const char*> argv;
    for (const auto& a : args) argv.push_back(a.c_str());
    std::ostringstream out, err;
    int code = cli::run(static_cast<int>(argv.size()), argv.data(), out, err);
    return {code, out.str(), err.str()};
}

std::size_t count_lines(const std::string& s) { return static_cast<std::size_t>(std::count(s.begin(), s.end(), '\n')); }

const std::string kDataDir = FQG_DATA_DIR;

TEST(Cli, ClassesTable) {
    auto r = run_cli({"classes"});
    EXPECT_EQ(r.code, 0);
    EXPECT_EQ(count_lines(r.out), 2u + 6u);
    EXPECT_NE(r.out.find("order 168, 6 classes, exponent 84"), std::string::npos);

    auto s5 = run_cli({"classes", "--group", "builtin:s5"});
    EXPECT_EQ(count_lines(s5.out), 2u + 7u);
    auto trivial = run_cli({"classes", "--group", "file:" + kDataDir + "/trivial.grp"});
    EXPECT_EQ(trivial.code, 0);
    EXPECT_EQ(count_lines(trivial.out), 2u + 1u);
}

TEST(Cli, ClassesJson) {
    auto r = run_cli({"classes", "--format", "json"});
    ASSERT_EQ(r.code, 0);
    auto j = nlohmann::json::parse(r.out);
    EXPECT_EQ(j["order"], 168);
    ASSERT_EQ(j["classes"].size(), 6u);
    std::vector<int> sizes;
    for (const auto& c : j["classes"]) sizes.push_back(c["size"]);
    EXPECT_EQ(sizes, (std::vector<int>{1, 21, 56, 42, 24, 24}));
}

TEST(Cli, DecomposeText) {
    auto r = run_cli({"decompose", "--p", "11"});
    EXPECT_EQ(r.code, 0);
    EXPECT_NE(r.out.find("components: (1,1),(3,1),(3,1),(6,1),(7,1),(8,1)"), std::string::npos);
    EXPECT_NE(r.out.find("type: 1"), std::string::npos);
    EXPECT_NE(r.out.find("splitting field: yes"), std::string::npos);

    auto r2 = run_cli({"decompose", "--p", "13", "--k", "3"});
    EXPECT_EQ(r2.code, 0);
    EXPECT_NE(r2.out.find("components: (1,1),(6,1),(7,1),(8,1),(3,2)"), std::string::npos);
    EXPECT_NE(r2.out.find("M(3,F_{q^2})"), std::string::npos);
    EXPECT_NE(r2.out.find("splitting field: no"), std::string::npos);
}

TEST(Cli, TextAndJsonAgree) {
    for (const char* p : {"5", "11", "13", "29"}) {
        auto text = run_cli({"decompose", "--p", p, "--k", "2"});
        auto json = run_cli({"decompose", "--p", p, "--k", "2", "--format", "json"});
        ASSERT_EQ(text.code, 0);
        ASSERT_EQ(json.code, 0);
        auto j = nlohmann::json::parse(json.out);
        std::vector<Component> comps;
        for (const auto& c : j["components"]) comps.push_back({c["n"], c["d"]});
        EXPECT_NE(text.out.find("components: " + components_to_string(comps) + "\n"), std::string::npos);
        EXPECT_NE(text.out.find("type: " + std::to_string(j["type"].get<int>())), std::string::npos);
    }
}

TEST(Cli, JsonIsByteIdenticalAcrossRuns) {
    for (const std::vector<std::string>& args :
         {std::vector<std::string>{"units", "--p", "17", "--k", "5", "--format", "json"},
          std::vector<std::string>{"oracle", "--p", "13", "--format", "json", "--seed", "3"},
          std::vector<std::string>{"check", "--p", "11..40", "--k", "1..3", "--format", "json"}}) {
        auto a = run_cli(args);
        auto b = run_cli(args);
        EXPECT_EQ(a.code, 0);
        EXPECT_EQ(a.out, b.out);
    }
}

TEST(Cli, Units) {
    auto r = run_cli({"units", "--p", "11"});
    EXPECT_EQ(r.code, 0);
    EXPECT_EQ(r.out.rfind("unit group: F_11^× × GL(3,11)^2 × GL(6,11) × GL(7,11) × GL(8,11), order ", 0), 0u);
    auto j = nlohmann::json::parse(run_cli({"units", "--p", "5", "--format", "json"}).out);
    EXPECT_EQ(j["type"], 2);
    EXPECT_EQ(j["unit_group"].back()["field"], "5^2");
    Decomposition dec{{{1, 1}, {6, 1}, {7, 1}, {8, 1}, {3, 2}}, 168, 5, 1};
    EXPECT_EQ(j["order"], unit_group(dec).total_order.str());
}

TEST(Cli, Oracle) {
    auto r = run_cli({"oracle", "--p", "11"});
    EXPECT_EQ(r.code, 0);
    EXPECT_NE(r.out.find("verified: yes"), std::string::npos);
    EXPECT_NE(r.out.find("components: (1,1),(3,1),(3,1),(6,1),(7,1),(8,1)"), std::string::npos);
    auto j = nlohmann::json::parse(run_cli({"oracle", "--p", "13", "--format", "json"}).out);
    EXPECT_EQ(j["verified"], true);
    EXPECT_FALSE(j.contains("time"));
    EXPECT_EQ(run_cli({"oracle", "--p", "11", "--k", "9"}).code, cli::kInputError);  // exceeds --qmax
}

TEST(Cli, Check) {
    auto r = run_cli({"check", "--p", "5..50", "--k", "1..6"});
    EXPECT_EQ(r.code, 0);
    // Primes 5..50 without 7: 12 of them.
    EXPECT_NE(r.out.find("checked 72 cells: 72 passed, 0 failed, 0 with oracle, 1 primes skipped"),
              std::string::npos)
        << r.out;
    auto v = run_cli({"check", "--p", "11,13", "--k", "1", "-v", "--with-oracle"});
    EXPECT_EQ(v.code, 0);
    EXPECT_NE(v.out.find("PASS p=11 k=1 type=1 oracle"), std::string::npos);
    EXPECT_NE(v.out.find("PASS p=13 k=1 type=2 oracle"), std::string::npos);
}

TEST(Cli, ExitCodes) {
    EXPECT_EQ(run_cli({"decompose", "--p", "7"}).code, cli::kModularCase);
    EXPECT_EQ(run_cli({"oracle", "--p", "3"}).code, cli::kModularCase);
    EXPECT_EQ(run_cli({"check", "--p", "7"}).code, cli::kModularCase);
    EXPECT_EQ(run_cli({"decompose", "--p", "12"}).code, cli::kInputError);
    EXPECT_EQ(run_cli({"decompose"}).code, cli::kInputError);
    EXPECT_EQ(run_cli({}).code, cli::kInputError);
    EXPECT_EQ(run_cli({"decompose", "--p", "11", "--k", "0"}).code, cli::kInputError);
    EXPECT_EQ(run_cli({"decompose", "--p", "11", "--format", "xml"}).code, cli::kInputError);
    EXPECT_EQ(run_cli({"classes", "--group", "builtin:nope"}).code, cli::kInputError);
    EXPECT_EQ(run_cli({"classes", "--group", "file:/nonexistent.grp"}).code, cli::kInputError);
    EXPECT_EQ(run_cli({"decompose", "--p", "x1"}).code, cli::kInputError);
    auto ambiguous = run_cli({"decompose", "--group", "builtin:s5", "--p", "11"});
    EXPECT_EQ(ambiguous.code, cli::kNotUnique);
    EXPECT_NE(ambiguous.out.find("(1,1),(1,1),(4,1),(4,1),(5,1),(5,1),(6,1)"), std::string::npos);
    EXPECT_EQ(run_cli({"--help"}).code, 0);
}

TEST(Cli, NumberLists) {
    auto l = cli::parse_number_list("3,5..7, 11");
    EXPECT_EQ(l.values, (std::vector<std::uint64_t>{3, 5, 6, 7, 11}));
    EXPECT_EQ(l.from_range, (std::vector<bool>{false, true, true, true, false}));
    EXPECT_THROW(cli::parse_number_list(""), ParseError);
    EXPECT_THROW(cli::parse_number_list("9..3"), ParseError);
    EXPECT_THROW(cli::parse_number_list("1,,2"), ParseError);
    EXPECT_THROW(cli::parse_number_list("-4"), ParseError);
}

}  // namespace
}  // namespace fqg
