#ifndef FQG_WEDDER_HPP
#define FQG_WEDDER_HPP

// Analytic Artin-Wedderburn solver. The cyclotomic partition fixes the number
// of simple components and their center degrees d_i; doubly transitive
// actions force components M(k-1, F_q); the matrix sizes n_i are then the
// solutions of Σ d_i n_i² = |G|.

#include <algorithm>
#include <compare>
#include <cstddef>
#include <cstdint>
#include <map>
#include <set>
#include <string>
#include <tuple>
#include <vector>

#include "fqg/charkit.hpp"
#include "fqg/cyclo.hpp"
#include "fqg/error.hpp"
#include "fqg/perm.hpp"

namespace fqg {

// M(n, F_{q^d}).
struct Component {
    std::uint64_t n = 1;
    std::uint64_t d = 1;

    std::uint64_t dimension() const noexcept { return d * n * n; }

    friend bool operator==(const Component&, const Component&) = default;
    friend auto operator<=>(const Component& a, const Component& b) {
        return std::tie(a.d, a.n) <=> std::tie(b.d, b.n);
    }
};

inline void canonicalize(std::vector<Component>& components) {
    std::sort(components.begin(), components.end());
}

inline std::string components_to_string(const std::vector<Component>& components) {
    std::string out;
    for (const auto& c : components) {
        if (!out.empty()) out += ",";
        out += "(" + std::to_string(c.n) + "," + std::to_string(c.d) + ")";
    }
    return out;
}

struct Decomposition {
    std::vector<Component> components;  // ordered by (d, n)
    std::uint64_t group_order = 0;
    std::uint64_t p = 0;
    unsigned k = 1;

    std::uint64_t total_dimension() const noexcept {
        std::uint64_t sum = 0;
        for (const auto& c : components) sum += c.dimension();
        return sum;
    }

    // e.g. "F_q ⊕ M(3,F_q)^2 ⊕ M(6,F_q) ⊕ M(3,F_{q^2})"
    std::string to_string() const {
        std::string out;
        for (std::size_t i = 0; i < components.size();) {
            std::size_t j = i;
            while (j < components.size() && components[j] == components[i]) ++j;
            const auto& c = components[i];
            std::string field = c.d == 1 ? "F_q" : "F_{q^" + std::to_string(c.d) + "}";
            std::string term = c.n == 1 ? field : "M(" + std::to_string(c.n) + "," + field + ")";
            if (j - i > 1) term += "^" + std::to_string(j - i);
            if (!out.empty()) out += " ⊕ ";
            out += term;
            i = j;
        }
        return out;
    }

    friend bool operator==(const Decomposition&, const Decomposition&) = default;
};

struct SolverReport {
    std::vector<Decomposition> solutions;
    bool unique = false;
    std::vector<Component> forced;
};

// Components forced by the augmentation map and by actions whose zero-sum
// module passes deleted_module_check. Each action must be a permutation
// representation of the same abstract group (same order). Equal sizes are
// reported once, since two actions can afford isomorphic modules.
inline std::vector<Component> forced_components(const FiniteGroup& group, std::uint64_t p,
                                                const std::vector<const FiniteGroup*>& actions) {
    if (!is_prime(p)) throw Error("forced_components: " + std::to_string(p) + " is not prime");
    if (group.order() % p == 0) throw ModularCaseError(p, group.order());
    std::vector<Component> forced{{1, 1}};
    std::set<std::uint64_t> sizes{1};
    for (const FiniteGroup* action : actions) {
        if (action->order() != group.order()) {
            throw Error("forced_components: action of order " + std::to_string(action->order()) +
                        " does not realize a group of order " + std::to_string(group.order()));
        }
        auto verdict = deleted_module_check(*action, p);
        if (!verdict.irreducible) continue;
        if (sizes.insert(verdict.module_degree).second) forced.push_back({verdict.module_degree, 1});
    }
    canonicalize(forced);
    return forced;
}

namespace detail {

struct SlotGroup {
    std::uint64_t d;
    std::size_t count;
};

inline void enumerate_sizes(const std::vector<SlotGroup>& groups, std::size_t group_index,
                            std::size_t used_in_group, std::uint64_t max_n, std::uint64_t remaining,
                            std::uint64_t min_mass_after, std::vector<Component>& current,
                            std::vector<std::vector<Component>>& out) {
    if (group_index == groups.size()) {
        if (remaining == 0) out.push_back(current);
        return;
    }
    const auto& g = groups[group_index];
    if (used_in_group == g.count) {
        const std::uint64_t next_d = group_index + 1 < groups.size() ? groups[group_index + 1].d : 1;
        enumerate_sizes(groups, group_index + 1, 0, isqrt(remaining / next_d), remaining,
                        min_mass_after, current, out);
        return;
    }
    // Mass the slots after this one need at minimum (n = 1 each).
    const std::uint64_t slots_left_here = g.count - used_in_group - 1;
    const std::uint64_t reserve = min_mass_after - g.d;
    const std::uint64_t limit = std::min<std::uint64_t>(max_n, isqrt(remaining / g.d));
    for (std::uint64_t n = limit; n >= 1; --n) {
        const std::uint64_t mass = g.d * n * n;
        if (mass > remaining || remaining - mass < reserve) continue;
        current.push_back({n, g.d});
        const std::uint64_t next_max = slots_left_here > 0 ? n : ~std::uint64_t{0};
        enumerate_sizes(groups, group_index, used_in_group + 1, next_max, remaining - mass, reserve, current,
                        out);
        current.pop_back();
    }
}

}  // namespace detail

// All multisets of components with the given center degrees that contain the
// forced components and satisfy Σ d n² = group_order.
inline SolverReport solve(std::uint64_t group_order, std::vector<std::size_t> degrees,
                          const std::vector<Component>& forced) {
    SolverReport report;
    report.forced = forced;
    canonicalize(report.forced);

    std::uint64_t forced_mass = 0;
    for (const auto& c : report.forced) {
        auto slot = std::find(degrees.begin(), degrees.end(), c.d);
        if (slot == degrees.end()) {
            throw Error("solve: forced component (" + std::to_string(c.n) + "," + std::to_string(c.d) +
                        ") has no free slot of center degree " + std::to_string(c.d));
        }
        degrees.erase(slot);
        forced_mass += c.dimension();
    }
    if (forced_mass > group_order) throw Error("solve: forced components exceed the group order");

    std::map<std::uint64_t, std::size_t> by_degree;
    std::uint64_t min_mass = 0;
    for (auto d : degrees) {
        ++by_degree[d];
        min_mass += d;
    }
    std::vector<detail::SlotGroup> groups;
    for (auto [d, count] : by_degree) groups.push_back({d, count});

    const std::uint64_t remaining = group_order - forced_mass;
    std::vector<std::vector<Component>> raw;
    std::vector<Component> current;
    if (groups.empty()) {
        if (remaining == 0) raw.emplace_back();
    } else if (remaining >= min_mass) {
        detail::enumerate_sizes(groups, 0, 0, isqrt(remaining / groups.front().d), remaining, min_mass,
                                current, raw);
    }

    std::set<std::vector<Component>> seen;
    for (auto& extra : raw) {
        std::vector<Component> all = report.forced;
        all.insert(all.end(), extra.begin(), extra.end());
        canonicalize(all);
        if (!seen.insert(all).second) continue;
        report.solutions.push_back({std::move(all), group_order, 0, 0});
    }
    std::sort(report.solutions.begin(), report.solutions.end(),
              [](const Decomposition& a, const Decomposition& b) { return a.components < b.components; });
    report.unique = report.solutions.size() == 1;
    return report;
}

// Every component is a matrix ring over F_q itself.
inline bool splitting_field_check(const Decomposition& dec) {
    std::uint64_t sum_squares = 0;
    for (const auto& c : dec.components) {
        if (c.d != 1) return false;
        sum_squares += c.n * c.n;
    }
    return sum_squares == dec.group_order;
}

// Built-in realizations, built once.
inline const FiniteGroup& sl32_on_s8() {
    static const FiniteGroup group = builtin_sl32_on_s8();
    return group;
}

inline const FiniteGroup& sl32_on_p2f2() {
    static const FiniteGroup group = builtin_sl32_on_p2f2();
    return group;
}

inline const FiniteGroup& s5_natural() {
    static const FiniteGroup group = builtin_s5();
    return group;
}

// True when the class data matches SL(3,2): order 168 with classes
// (order, size) = (1,1),(2,21),(3,56),(4,42),(7,24),(7,24). No union of
// classes containing the identity has size dividing 168 other than 1 and
// 168, so such a group is simple, and PSL(2,7) ≅ SL(3,2) is the only simple
// group of order 168.
inline bool has_sl32_class_data(const FiniteGroup& group) {
    if (group.order() != 168) return false;
    std::vector<std::pair<std::uint64_t, std::size_t>> data;
    for (const auto& c : group.classes()) data.emplace_back(c.element_order, c.size);
    const std::vector<std::pair<std::uint64_t, std::size_t>> expected{{1, 1},  {2, 21}, {3, 56},
                                                                      {4, 42}, {7, 24}, {7, 24}};
    return data == expected;
}

// 1: the two classes of elements of order 7 stay separate (six components);
// 2: they fuse (five components, one over F_{q^2}).
inline int classify_type_for(const FiniteGroup& group, std::uint64_t p, unsigned k) {
    if (!has_sl32_class_data(group)) throw Error("classify_type: group is not SL(3,2)");
    auto partition = cyclotomic_partition(build_context(group, p, k));
    std::vector<std::size_t> order7;
    for (std::size_t c = 0; c < group.class_count(); ++c) {
        if (group.classes()[c].element_order == 7) order7.push_back(c);
    }
    for (const auto& orbit : partition.orbits) {
        auto has = [&](std::size_t c) { return std::find(orbit.begin(), orbit.end(), c) != orbit.end(); };
        if (has(order7[0])) return has(order7[1]) ? 2 : 1;
    }
    throw InvariantError("classify_type: order-7 class missing from partition");
}

inline int classify_type(std::uint64_t p, unsigned k) { return classify_type_for(sl32_on_s8(), p, k); }

// Full analytic pipeline: cyclotomic partition, forced components, solver.
struct AnalyticResult {
    CycloContext context;
    ComponentShape shape;
    std::vector<Component> forced;
    SolverReport report;
};

inline AnalyticResult analytic_decomposition(const FiniteGroup& group, std::uint64_t p, unsigned k,
                                             const std::vector<const FiniteGroup*>& actions) {
    AnalyticResult result{build_context(group, p, k), {}, {}, {}};
    result.shape = component_count_and_degrees(result.context);
    result.forced = forced_components(group, p, actions);
    result.report = solve(group.order(), result.shape.degrees, result.forced);
    for (auto& dec : result.report.solutions) {
        dec.p = p;
        dec.k = k;
    }
    return result;
}

// Actions used for a group: both built-in SL(3,2) realizations when the class
// data is that of SL(3,2), otherwise the group's own action.
inline std::vector<const FiniteGroup*> default_actions(const FiniteGroup& group) {
    if (has_sl32_class_data(group)) return {&sl32_on_s8(), &sl32_on_p2f2()};
    return {&group};
}

}  // namespace fqg

#endif  // FQG_WEDDER_HPP
