#include <gtest/gtest.h>

#include "fqg/charkit.hpp"
#include "fqg/numeric.hpp"
#include "fqg/perm.hpp"

namespace fqg {
namespace {

// Fixed points counted directly on the reference class representatives,
// listed in the class order (α1..α6).
TEST(PermCharacter, S8EmbeddingValues) {
    const auto g = builtin_sl32_on_s8();
    auto chi = perm_character(g);
    EXPECT_EQ(chi.degree, 8);
    std::vector<std::int64_t> expected;
    for (const char* rep : {"()", "(1,2)(3,4)(5,8)(6,7)", "(3,5,7)(4,6,8)", "(1,2,3,5)(4,8,7,6)",
                            "(2,3,5,4,7,8,6)", "(2,4,6,5,8,3,7)"}) {
        expected.push_back(static_cast<std::int64_t>(parse_cycles(rep, 8).fixed_points()));
    }
    EXPECT_EQ(expected, (std::vector<std::int64_t>{8, 0, 2, 0, 1, 1}));
    EXPECT_EQ(chi.values, expected);
}

TEST(PermCharacter, TrivialAndFanoPlane) {
    auto trivial = generate({Permutation(1)});
    EXPECT_EQ(perm_character(trivial).values, std::vector<std::int64_t>{1});
    auto p2 = builtin_sl32_on_p2f2();
    auto chi = perm_character(p2);
    EXPECT_EQ(chi.values[0], 7);
    for (auto v : chi.values) EXPECT_GE(v, 0);
}

TEST(InnerProduct, NormsOfDoublyTransitiveActions) {
    const auto s8 = builtin_sl32_on_s8();
    auto chi8 = perm_character(s8);
    // (1·64 + 56·4 + 24·1 + 24·1) / 168
    EXPECT_EQ((64 + 56 * 4 + 24 + 24) % 168, 0);
    EXPECT_EQ(inner_product(chi8, chi8), (64 + 56 * 4 + 24 + 24) / 168);
    EXPECT_EQ(inner_product(chi8, chi8), 2);

    const auto p2 = builtin_sl32_on_p2f2();
    auto chi7 = perm_character(p2);
    // Brute force over all 168 elements rather than classes.
    std::int64_t brute = 0;
    for (const auto& e : p2.elements()) {
        auto f = static_cast<std::int64_t>(e.fixed_points());
        brute += f * f;
    }
    EXPECT_EQ(brute % 168, 0);
    EXPECT_EQ(inner_product(chi7, chi7), brute / 168);
    EXPECT_EQ(inner_product(chi7, chi7), 2);
}

TEST(InnerProduct, BurnsideCountsOrbits) {
    std::vector<FiniteGroup> groups{builtin_sl32_on_s8(), builtin_sl32_on_p2f2(), builtin_s5(),
                                    generate({parse_cycles("(1,2)(3,4)", 6), parse_cycles("(5,6)", 6)})};
    for (const auto& g : groups) {
        auto chi = perm_character(g);
        auto one = trivial_character(g);
        EXPECT_EQ(inner_product(chi, one), static_cast<std::int64_t>(count_orbits(g)));
    }
    EXPECT_EQ(count_orbits(groups[3]), 3u);
}

TEST(InnerProduct, RejectsMismatchedGroups) {
    auto a = builtin_s5();
    auto b = builtin_s5();
    EXPECT_THROW(inner_product(perm_character(a), perm_character(b)), Error);
}

TEST(AnalyzeAction, OrbitStabilizer) {
    for (const auto& g : {builtin_sl32_on_s8(), builtin_sl32_on_p2f2(), builtin_s5()}) {
        auto r = analyze_action(g);
        EXPECT_TRUE(r.transitive);
        EXPECT_TRUE(r.doubly_transitive);
        EXPECT_EQ(r.stab1_order * r.points, g.order());
        EXPECT_EQ(r.stab2_order * (r.points - 1), r.stab1_order);
    }
}

TEST(AnalyzeAction, IntransitiveAndTransitiveNotDoubly) {
    auto intransitive = generate({parse_cycles("(1,2,3)", 5), parse_cycles("(4,5)", 5)});
    auto r = analyze_action(intransitive);
    EXPECT_EQ(r.num_orbits, 2u);
    EXPECT_FALSE(r.transitive);
    EXPECT_FALSE(r.doubly_transitive);
    EXPECT_FALSE(deleted_module_check(intransitive, 7).irreducible);

    // The cyclic group C5 on 5 points: transitive, <χ,χ> = 5.
    auto cyclic = generate({parse_cycles("(1,2,3,4,5)", 5)});
    auto rc = analyze_action(cyclic);
    EXPECT_TRUE(rc.transitive);
    EXPECT_EQ(rc.inner_norm, 5);
    EXPECT_FALSE(rc.doubly_transitive);
}

TEST(DeletedModule, CertifiesDegreeSixAndSevenModules) {
    auto p2 = deleted_module_check(builtin_sl32_on_p2f2(), 11);
    EXPECT_TRUE(p2.irreducible);
    EXPECT_EQ(p2.module_degree, 6u);
    EXPECT_EQ(p2.report.stab2_order, 4u);

    auto s8 = deleted_module_check(builtin_sl32_on_s8(), 11);
    EXPECT_TRUE(s8.irreducible);
    EXPECT_EQ(s8.module_degree, 7u);
    EXPECT_EQ(s8.report.stab2_order, 3u);
}

TEST(DeletedModule, SymmetricGroupDeletedModule) {
    auto v = deleted_module_check(builtin_s5(), 7);
    EXPECT_TRUE(v.irreducible);
    EXPECT_EQ(v.module_degree, 4u);
    // p = 5 divides the number of points; p = 3 divides |G_{1,2}| = 6.
    EXPECT_FALSE(deleted_module_check(builtin_s5(), 5).irreducible);
    EXPECT_FALSE(deleted_module_check(builtin_s5(), 3).irreducible);
}

TEST(DeletedModule, VerdictFollowsDivisibilityAcrossPrimes) {
    const auto s8 = builtin_sl32_on_s8();
    const auto p2 = builtin_sl32_on_p2f2();
    for (std::uint64_t p = 2; p < 200; ++p) {
        if (!is_prime(p)) continue;
        for (const auto* g : {&s8, &p2}) {
            auto v = deleted_module_check(*g, p);
            bool expected = v.report.points % p != 0 && v.report.stab2_order % p != 0;
            EXPECT_EQ(v.irreducible, expected) << p;
            if (p != 2 && p != 3 && p != 7) {
                EXPECT_TRUE(v.irreducible) << p;
            }
        }
    }
}

}  // namespace
}  // namespace fqg
