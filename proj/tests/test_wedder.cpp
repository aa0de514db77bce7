#include <gtest/gtest.h>

#include <fstream>
#include <set>
#include <vector>

#include "fqg/wedder.hpp"
#include "oracles.hpp"

namespace fqg {
namespace {

const std::vector<Component> kType1{{1, 1}, {3, 1}, {3, 1}, {6, 1}, {7, 1}, {8, 1}};
const std::vector<Component> kType2{{1, 1}, {6, 1}, {7, 1}, {8, 1}, {3, 2}};

TEST(Forced, SixAndSevenFromTheTwoActions) {
    auto forced = forced_components(sl32_on_s8(), 11, default_actions(sl32_on_s8()));
    EXPECT_EQ(forced, (std::vector<Component>{{1, 1}, {6, 1}, {7, 1}}));
    // One action alone gives one size; repeating an action does not duplicate it.
    EXPECT_EQ(forced_components(sl32_on_s8(), 11, {&sl32_on_s8(), &sl32_on_s8()}),
              (std::vector<Component>{{1, 1}, {7, 1}}));
    EXPECT_EQ(forced_components(sl32_on_s8(), 11, {}), (std::vector<Component>{{1, 1}}));
}

TEST(Forced, Errors) {
    EXPECT_THROW(forced_components(sl32_on_s8(), 7, {&sl32_on_s8()}), ModularCaseError);
    EXPECT_THROW(forced_components(sl32_on_s8(), 15, {}), Error);
    EXPECT_THROW(forced_components(sl32_on_s8(), 11, {&s5_natural()}), Error);
}

TEST(Solve, TypeOneIsUnique) {
    auto r = solve(168, std::vector<std::size_t>(6, 1), {{1, 1}, {6, 1}, {7, 1}});
    ASSERT_TRUE(r.unique);
    EXPECT_EQ(r.solutions[0].components, kType1);
    EXPECT_EQ(r.solutions[0].to_string(), "F_q ⊕ M(3,F_q)^2 ⊕ M(6,F_q) ⊕ M(7,F_q) ⊕ M(8,F_q)");
}

TEST(Solve, TypeTwoIsUnique) {
    auto r = solve(168, {1, 1, 1, 1, 2}, {{1, 1}, {6, 1}, {7, 1}});
    ASSERT_TRUE(r.unique);
    EXPECT_EQ(r.solutions[0].components, kType2);
    EXPECT_EQ(r.solutions[0].to_string(), "F_q ⊕ M(6,F_q) ⊕ M(7,F_q) ⊕ M(8,F_q) ⊕ M(3,F_{q^2})");
    EXPECT_EQ(r.solutions[0].total_dimension(), 168u);
}

TEST(Solve, WithoutForcingThereAreSeveralCandidates) {
    auto r = solve(168, std::vector<std::size_t>(6, 1), {{1, 1}});
    auto expected = testing::sum_of_squares_solutions(167, 5);
    EXPECT_FALSE(r.unique);
    ASSERT_EQ(r.solutions.size(), expected.size());
    std::set<std::vector<std::uint64_t>> got;
    for (const auto& dec : r.solutions) {
        std::vector<std::uint64_t> ns;
        bool skipped_one = false;
        for (const auto& c : dec.components) {
            if (c.n == 1 && !skipped_one) {
                skipped_one = true;
                continue;
            }
            ns.push_back(c.n);
        }
        got.insert(ns);
    }
    EXPECT_EQ(got, expected);
}

// Plain nested loops over mixed center degrees, no pruning.
std::set<std::vector<Component>> brute_mixed(std::uint64_t total, const std::vector<std::size_t>& degrees) {
    std::set<std::vector<Component>> out;
    std::vector<Component> cur;
    auto rec = [&](auto&& self, std::size_t i, std::uint64_t left) -> void {
        if (i == degrees.size()) {
            if (left == 0) {
                auto s = cur;
                std::sort(s.begin(), s.end());
                out.insert(s);
            }
            return;
        }
        for (std::uint64_t n = 1; degrees[i] * n * n <= left; ++n) {
            cur.push_back({n, degrees[i]});
            self(self, i + 1, left - degrees[i] * n * n);
            cur.pop_back();
        }
    };
    rec(rec, 0, total);
    return out;
}

TEST(Solve, MatchesBruteForceOnMixedDegrees) {
    const std::vector<std::vector<std::size_t>> shapes{
        {1, 1, 1, 1, 2}, {1, 2, 2}, {1, 1, 3}, {1, 1, 1, 2, 2}, {2, 2, 2, 1}, {1, 1, 1, 1, 1, 1, 1}};
    for (std::uint64_t order : {24, 60, 120, 168}) {
        for (const auto& shape : shapes) {
            auto dims = shape;
            auto expected = brute_mixed(order, dims);
            auto r = solve(order, dims, {});
            std::set<std::vector<Component>> got;
            for (const auto& d : r.solutions) got.insert(d.components);
            EXPECT_EQ(got, expected) << order;
            EXPECT_EQ(r.solutions.size(), expected.size());
        }
    }
}

TEST(Solve, Errors) {
    EXPECT_THROW(solve(168, {1, 1, 1}, {{3, 2}}), Error);
    EXPECT_THROW(solve(10, {1, 1}, {{1, 1}, {4, 1}}), Error);
    auto none = solve(168, {1, 1}, {{1, 1}});
    EXPECT_TRUE(none.solutions.empty());
    EXPECT_FALSE(none.unique);
    auto trivial = solve(1, {1}, {{1, 1}});
    ASSERT_TRUE(trivial.unique);
    EXPECT_EQ(trivial.solutions[0].components, (std::vector<Component>{{1, 1}}));
}

TEST(Classify, KnownCells) {
    EXPECT_EQ(classify_type(11, 1), 1);
    EXPECT_EQ(classify_type(13, 3), 2);
    EXPECT_EQ(classify_type(5, 1), 2);
    EXPECT_EQ(classify_type(13, 2), 1);
    EXPECT_EQ(classify_type(29, 1), 1);
    EXPECT_EQ(classify_type_for(sl32_on_p2f2(), 5, 1), 2);
    for (std::uint64_t p : {2, 3, 7}) EXPECT_THROW(classify_type(p, 1), ModularCaseError);
    EXPECT_THROW(classify_type_for(s5_natural(), 11, 1), Error);
}

TEST(Classify, ClassDataRecognition) {
    EXPECT_TRUE(has_sl32_class_data(sl32_on_s8()));
    EXPECT_TRUE(has_sl32_class_data(sl32_on_p2f2()));
    EXPECT_FALSE(has_sl32_class_data(s5_natural()));
    std::ifstream in(std::string(FQG_DATA_DIR) + "/sl32_s8.grp");
    ASSERT_TRUE(in.good());
    auto from_file = load_group_file(std::string(FQG_DATA_DIR) + "/sl32_s8.grp");
    EXPECT_TRUE(has_sl32_class_data(from_file));
    EXPECT_EQ(default_actions(from_file).size(), 2u);
    EXPECT_EQ(default_actions(s5_natural()).size(), 1u);
}

TEST(Analytic, SweepMatchesResidueRule) {
    for (std::uint64_t p = 5; p < 200; ++p) {
        if (!is_prime(p) || p == 7) continue;
        for (unsigned k = 1; k <= 12; ++k) {
            auto r = analytic_decomposition(sl32_on_s8(), p, k, default_actions(sl32_on_s8()));
            ASSERT_TRUE(r.report.unique) << p << "^" << k;
            const auto q7 = pow_mod(p % 7, k, 7);
            const bool type1 = q7 == 1 || q7 == 2 || q7 == 4;
            EXPECT_EQ(r.report.solutions[0].components, type1 ? kType1 : kType2) << p << "^" << k;
            EXPECT_EQ(classify_type(p, k), type1 ? 1 : 2);
            EXPECT_EQ(splitting_field_check(r.report.solutions[0]), type1);
            EXPECT_EQ(r.report.solutions[0].p, p);
            EXPECT_EQ(r.report.solutions[0].k, k);
        }
    }
}

TEST(Analytic, SymmetricGroups) {
    auto s5 = analytic_decomposition(s5_natural(), 11, 1, default_actions(s5_natural()));
    // Forced: trivial and the degree-4 module; 120 - 1 - 16 = 103 over five slots.
    EXPECT_EQ(s5.forced, (std::vector<Component>{{1, 1}, {4, 1}}));
    std::set<std::vector<Component>> all;
    for (const auto& d : s5.report.solutions) all.insert(d.components);
    EXPECT_TRUE(all.count({{1, 1}, {1, 1}, {4, 1}, {4, 1}, {5, 1}, {5, 1}, {6, 1}}));

    auto s4 = load_group_file(std::string(FQG_DATA_DIR) + "/s4.grp");
    auto r = analytic_decomposition(s4, 5, 1, default_actions(s4));
    ASSERT_TRUE(r.report.unique);
    EXPECT_EQ(r.report.solutions[0].components,
              (std::vector<Component>{{1, 1}, {1, 1}, {2, 1}, {3, 1}, {3, 1}}));
    EXPECT_TRUE(splitting_field_check(r.report.solutions[0]));
}

TEST(Analytic, TrivialGroup) {
    auto g = load_group_file(std::string(FQG_DATA_DIR) + "/trivial.grp");
    auto r = analytic_decomposition(g, 2, 1, {&g});
    ASSERT_TRUE(r.report.unique);
    EXPECT_EQ(r.report.solutions[0].to_string(), "F_q");
}

}  // namespace
}  // namespace fqg
