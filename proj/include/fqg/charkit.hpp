#ifndef FQG_CHARKIT_HPP
#define FQG_CHARKIT_HPP

// Fixed-point characters of permutation actions and the divisibility test
// certifying that the zero-sum submodule of the permutation module is
// irreducible in coprime characteristic.

#include <cstddef>
#include <cstdint>
#include <numeric>
#include <vector>

#include "fqg/error.hpp"
#include "fqg/perm.hpp"

namespace fqg {

struct PermCharacter {
    const FiniteGroup* group = nullptr;
    std::vector<std::int64_t> values;  // one per conjugacy class
    std::int64_t degree = 0;
};

inline PermCharacter perm_character(const FiniteGroup& group) {
    PermCharacter chi{&group, {}, static_cast<std::int64_t>(group.degree())};
    chi.values.reserve(group.class_count());
    for (const auto& cls : group.classes()) {
        chi.values.push_back(static_cast<std::int64_t>(cls.representative.fixed_points()));
    }
    return chi;
}

inline PermCharacter trivial_character(const FiniteGroup& group) {
    return {&group, std::vector<std::int64_t>(group.class_count(), 1), 1};
}

// (1/|G|) Σ_c |c| a(c) b(c); permutation characters are real so no conjugation.
inline std::int64_t inner_product(const PermCharacter& a, const PermCharacter& b) {
    if (a.group != b.group || a.group == nullptr) {
        throw Error("inner_product: characters belong to different groups");
    }
    const auto& classes = a.group->classes();
    std::int64_t sum = 0;
    for (std::size_t c = 0; c < classes.size(); ++c) {
        sum += static_cast<std::int64_t>(classes[c].size) * a.values[c] * b.values[c];
    }
    const auto order = static_cast<std::int64_t>(a.group->order());
    if (sum % order != 0) {
        throw InvariantError("inner_product: class sum " + std::to_string(sum) +
                             " not divisible by |G| = " + std::to_string(order));
    }
    return sum / order;
}

// Orbits of the group on its points, by union-find over the generators.
inline std::size_t count_orbits(const FiniteGroup& group) {
    std::vector<std::size_t> parent(group.degree());
    std::iota(parent.begin(), parent.end(), std::size_t{0});
    auto find = [&](std::size_t x) {
        while (parent[x] != x) x = parent[x] = parent[parent[x]];
        return x;
    };
    std::size_t orbits = group.degree();
    for (const auto& g : group.generators()) {
        for (std::uint32_t i = 0; i < g.degree(); ++i) {
            auto a = find(i);
            auto b = find(g(i));
            if (a != b) {
                parent[a] = b;
                --orbits;
            }
        }
    }
    return orbits;
}

struct ActionReport {
    std::size_t points = 0;
    std::size_t num_orbits = 0;
    std::int64_t inner_norm = 0;  // <χ, χ>
    std::size_t stab1_order = 0;  // |G_1|
    std::size_t stab2_order = 0;  // |G_{1,2}|
    bool transitive = false;
    bool doubly_transitive = false;
};

inline ActionReport analyze_action(const FiniteGroup& group) {
    ActionReport report;
    report.points = group.degree();
    report.num_orbits = count_orbits(group);
    report.transitive = report.num_orbits == 1;
    auto chi = perm_character(group);
    report.inner_norm = inner_product(chi, chi);
    for (const auto& g : group.elements()) {
        if (g(0) != 0) continue;
        ++report.stab1_order;
        if (report.points >= 2 && g(1) == 1) ++report.stab2_order;
    }
    report.doubly_transitive = report.transitive && report.points >= 2 && report.inner_norm == 2;
    return report;
}

struct DeletedModuleVerdict {
    ActionReport report;
    std::uint64_t prime = 0;
    bool irreducible = false;       // zero-sum module certified irreducible over F_p-fields
    std::size_t module_degree = 0;  // points - 1
};

// Certifies the (k-1)-dimensional zero-sum module irreducible when the action
// is doubly transitive, p does not divide k and p does not divide |G_{1,2}|.
inline DeletedModuleVerdict deleted_module_check(const FiniteGroup& group, std::uint64_t p) {
    DeletedModuleVerdict verdict;
    verdict.report = analyze_action(group);
    verdict.prime = p;
    verdict.module_degree = verdict.report.points == 0 ? 0 : verdict.report.points - 1;
    const auto& r = verdict.report;
    verdict.irreducible = r.doubly_transitive && r.points % p != 0 && r.stab2_order % p != 0;
    return verdict;
}

}  // namespace fqg

#endif  // FQG_CHARKIT_HPP
