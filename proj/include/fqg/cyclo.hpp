#ifndef FQG_CYCLO_HPP
#define FQG_CYCLO_HPP

// Cyclotomic F_q-classes: orbits of the conjugacy classes of G under the
// power maps g -> g^l, l ranging over the powers of q modulo the exponent.
// Their number is the number of simple components of F_qG and their sizes
// are the degrees of the component centers over F_q.

#include <algorithm>
#include <cstddef>
#include <cstdint>
#include <numeric>
#include <set>
#include <utility>
#include <vector>

#include "fqg/error.hpp"
#include "fqg/numeric.hpp"
#include "fqg/perm.hpp"

namespace fqg {

struct CycloContext {
    const FiniteGroup* group = nullptr;
    std::uint64_t p = 0;
    unsigned k = 1;
    BigInt q;
    std::uint64_t exponent = 1;   // e
    std::uint64_t r = 1;          // p'-part of e; equals e since p ∤ |G|
    std::uint64_t q_mod_e = 0;
    std::vector<std::uint64_t> powers;  // I_q: {q^j mod r}, sorted
};

struct CycloPartition {
    std::vector<std::vector<std::size_t>> orbits;  // class indices, each sorted
    std::vector<std::size_t> sizes;
};

inline CycloContext build_context(const FiniteGroup& group, std::uint64_t p, unsigned k) {
    if (!is_prime(p)) throw Error("build_context: " + std::to_string(p) + " is not prime");
    if (k == 0) throw Error("build_context: k must be positive");
    if (group.order() % p == 0) throw ModularCaseError(p, group.order());

    CycloContext ctx;
    ctx.group = &group;
    ctx.p = p;
    ctx.k = k;
    ctx.q = big_pow(p, k);
    ctx.exponent = group.exponent();
    // e divides |G|, so p ∤ |G| leaves no p-part.
    if (ctx.exponent % p == 0) throw InvariantError("build_context: p divides the exponent");
    ctx.r = ctx.exponent;
    ctx.q_mod_e = pow_mod(p % ctx.r, k, ctx.r);

    std::set<std::uint64_t> powers;
    std::uint64_t x = 1 % ctx.r;
    while (powers.insert(x).second) x = mul_mod(x, ctx.q_mod_e, ctx.r);
    ctx.powers.assign(powers.begin(), powers.end());
    return ctx;
}

inline CycloPartition cyclotomic_partition(const CycloContext& ctx) {
    const FiniteGroup& group = *ctx.group;
    const std::size_t n = group.class_count();
    std::vector<std::size_t> parent(n);
    std::iota(parent.begin(), parent.end(), std::size_t{0});
    auto find = [&](std::size_t x) {
        while (parent[x] != x) x = parent[x] = parent[parent[x]];
        return x;
    };
    for (std::size_t c = 0; c < n; ++c) {
        for (auto l : ctx.powers) {
            auto image = group.power_class(c, static_cast<std::int64_t>(l));
            auto a = find(c);
            auto b = find(image);
            if (a != b) parent[std::max(a, b)] = std::min(a, b);
        }
    }
    CycloPartition partition;
    std::vector<std::size_t> slot(n, n);
    for (std::size_t c = 0; c < n; ++c) {
        auto root = find(c);
        if (slot[root] == n) {
            slot[root] = partition.orbits.size();
            partition.orbits.emplace_back();
        }
        partition.orbits[slot[root]].push_back(c);
    }
    for (const auto& orbit : partition.orbits) partition.sizes.push_back(orbit.size());
    return partition;
}

struct ComponentShape {
    std::size_t count = 0;             // number of simple components
    std::vector<std::size_t> degrees;  // center degrees, sorted ascending
};

inline ComponentShape component_count_and_degrees(const CycloContext& ctx) {
    auto partition = cyclotomic_partition(ctx);
    ComponentShape shape{partition.orbits.size(), partition.sizes};
    std::sort(shape.degrees.begin(), shape.degrees.end());
    return shape;
}

}  // namespace fqg

#endif  // FQG_CYCLO_HPP
