#include <gtest/gtest.h>

#include <set>
#include <string>

#include "fqg/units.hpp"
#include "oracles.hpp"

namespace fqg {
namespace {

// q^(n(n-1)/2) Π_{i=1..n} (q^i - 1).
BigInt gl_order_alt(std::uint64_t n, const BigInt& q) {
    BigInt out = boost::multiprecision::pow(q, static_cast<unsigned>(n * (n - 1) / 2));
    for (unsigned i = 1; i <= n; ++i) out *= boost::multiprecision::pow(q, i) - 1;
    return out;
}

TEST(GlOrder, SmallCasesByEnumeration) {
    EXPECT_EQ(gl_order(2, 3), BigInt(testing::count_invertible_2x2(3)));
    EXPECT_EQ(gl_order(2, 3), BigInt(48));
    EXPECT_EQ(gl_order(2, 5), BigInt(testing::count_invertible_2x2(5)));
    EXPECT_EQ(gl_order(2, 5), BigInt(480));
    EXPECT_EQ(gl_order(2, 7), BigInt(testing::count_invertible_2x2(7)));
    EXPECT_EQ(gl_order(3, 2), BigInt(168));
    EXPECT_EQ(gl_order(1, 11), BigInt(10));
}

TEST(GlOrder, AlternateFormulaAndDivisibility) {
    for (std::uint64_t q = 2; q <= 13; ++q) {
        for (std::uint64_t n = 1; n <= 8; ++n) {
            const auto order = gl_order(n, q);
            EXPECT_EQ(order, gl_order_alt(n, q));
            EXPECT_EQ(order % boost::multiprecision::pow(BigInt(q - 1), static_cast<unsigned>(n)), 0);
        }
    }
    EXPECT_THROW(gl_order(0, 5), Error);
    EXPECT_THROW(gl_order(2, 1), Error);
}

TEST(UnitGroup, TypeOneOverEleven) {
    Decomposition dec{table_components(1), 168, 11, 1};
    auto r = unit_group(dec);
    EXPECT_EQ(r.to_string(), "F_11^× × GL(3,11)^2 × GL(6,11) × GL(7,11) × GL(8,11)");
    BigInt expected = BigInt(10) * gl_order_alt(3, 11) * gl_order_alt(3, 11) * gl_order_alt(6, 11) *
                      gl_order_alt(7, 11) * gl_order_alt(8, 11);
    EXPECT_EQ(r.total_order, expected);
    EXPECT_EQ(table_unit_group_string(1, 11, 1), r.to_string());
}

TEST(UnitGroup, TypeTwoOverThirteen) {
    Decomposition dec{table_components(2), 168, 13, 1};
    canonicalize(dec.components);
    auto r = unit_group(dec);
    EXPECT_EQ(r.to_string(), "F_13^× × GL(6,13) × GL(7,13) × GL(8,13) × GL(3,169)");
    EXPECT_EQ(r.total_order, BigInt(12) * gl_order_alt(6, 13) * gl_order_alt(7, 13) * gl_order_alt(8, 13) *
                                 gl_order_alt(3, 169));
    EXPECT_EQ(unit_factor_display(1, 169), "F_169^×");
}

TEST(UnitGroup, LargeFieldsStayExact) {
    // 199^12 is far beyond 64 bits; GL(8, 199^12) has about 6000 bits.
    Decomposition dec{table_components(1), 168, 199, 12};
    auto r = unit_group(dec);
    EXPECT_EQ(r.factors.back().field_size, boost::multiprecision::pow(BigInt(199), 12));
    EXPECT_GT(msb(r.total_order), 10000u);
    EXPECT_EQ(r.total_order % (boost::multiprecision::pow(BigInt(199), 12) - 1), 0);
}

TEST(Table, NineRowsCoverEveryCellOnce) {
    EXPECT_EQ(unit_table().size(), 9u);
    for (unsigned r = 1; r < 7; ++r) {
        for (unsigned k = 0; k < 6; ++k) {
            int hits = 0;
            for (const auto& row : unit_table()) hits += row.k_mod_6 == k && row.p_mod_7.contains(r);
            EXPECT_EQ(hits, 1) << r << "," << k;
        }
    }
    EXPECT_FALSE(table_row(7, 1).has_value());
    EXPECT_THROW(table_components(3), Error);
}

TEST(Table, RowsAgreeWithAnalyticPipeline) {
    for (std::uint64_t p = 5; p < 200; ++p) {
        if (!is_prime(p) || p == 7) continue;
        for (unsigned k = 1; k <= 12; ++k) {
            auto row = table_row(p, k);
            ASSERT_TRUE(row.has_value());
            auto r = analytic_decomposition(sl32_on_s8(), p, k, default_actions(sl32_on_s8()));
            ASSERT_TRUE(r.report.unique);
            auto expected = table_components(row->type);
            canonicalize(expected);
            EXPECT_EQ(r.report.solutions[0].components, expected) << p << "^" << k;
            EXPECT_EQ(unit_group(r.report.solutions[0]).to_string(), table_unit_group_string(row->type, p, k));
        }
    }
}

TEST(Json, Schema) {
    Decomposition dec{table_components(2), 168, 5, 1};
    canonicalize(dec.components);
    auto j = unit_report_json(dec, 2);
    std::vector<std::string> keys;
    for (auto it = j.begin(); it != j.end(); ++it) keys.push_back(it.key());
    EXPECT_EQ(keys, (std::vector<std::string>{"q", "type", "components", "unit_group", "order"}));
    EXPECT_EQ(j["q"]["p"], 5);
    EXPECT_EQ(j["q"]["k"], 1);
    EXPECT_EQ(j["type"], 2);
    EXPECT_EQ(j["components"].size(), 5u);
    EXPECT_EQ(j["unit_group"].back()["field"], "5^2");
    EXPECT_EQ(j["unit_group"].back()["n"], 3);
    EXPECT_EQ(j["order"], unit_group(dec).total_order.str());
    EXPECT_TRUE(unit_report_json(dec, std::nullopt)["type"].is_null());
    EXPECT_EQ(j.dump(), unit_report_json(dec, 2).dump());
}

}  // namespace
}  // namespace fqg
