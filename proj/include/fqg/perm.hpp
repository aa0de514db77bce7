#ifndef FQG_PERM_HPP
#define FQG_PERM_HPP

// Permutations on {0..n-1} (printed 1-indexed), fully enumerated permutation
// groups, conjugacy classes and power maps.

#include <algorithm>
#include <array>
#include <compare>
#include <cstddef>
#include <cstdint>
#include <fstream>
#include <numeric>
#include <optional>
#include <span>
#include <sstream>
#include <string>
#include <string_view>
#include <tuple>
#include <unordered_map>
#include <utility>
#include <vector>

#include "fqg/error.hpp"

namespace fqg {

class Permutation {
public:
    Permutation() = default;

    // Identity on `degree` points.
    explicit Permutation(std::size_t degree) : images_(degree) {
        std::iota(images_.begin(), images_.end(), std::uint32_t{0});
    }

    // images[i] is the image of point i (0-indexed); must be a bijection.
    explicit Permutation(std::vector<std::uint32_t> images) : images_(std::move(images)) {
        std::vector<bool> seen(images_.size(), false);
        for (auto image : images_) {
            if (image >= images_.size() || seen[image]) {
                throw Error("Permutation: image list is not a bijection");
            }
            seen[image] = true;
        }
    }

    std::size_t degree() const noexcept { return images_.size(); }
    std::uint32_t operator()(std::uint32_t point) const { return images_[point]; }
    std::span<const std::uint32_t> images() const noexcept { return images_; }

    bool is_identity() const noexcept {
        for (std::size_t i = 0; i < images_.size(); ++i) {
            if (images_[i] != i) return false;
        }
        return true;
    }

    Permutation inverse() const {
        std::vector<std::uint32_t> inv(images_.size());
        for (std::size_t i = 0; i < images_.size(); ++i) {
            inv[images_[i]] = static_cast<std::uint32_t>(i);
        }
        Permutation result;
        result.images_ = std::move(inv);
        return result;
    }

    std::size_t fixed_points() const noexcept {
        std::size_t count = 0;
        for (std::size_t i = 0; i < images_.size(); ++i) count += images_[i] == i;
        return count;
    }

    // Nontrivial cycles, each starting at its smallest point, ordered by that point.
    std::vector<std::vector<std::uint32_t>> cycles() const {
        std::vector<std::vector<std::uint32_t>> result;
        std::vector<bool> seen(images_.size(), false);
        for (std::uint32_t start = 0; start < images_.size(); ++start) {
            if (seen[start] || images_[start] == start) continue;
            std::vector<std::uint32_t> cycle;
            for (std::uint32_t x = start; !seen[x]; x = images_[x]) {
                seen[x] = true;
                cycle.push_back(x);
            }
            result.push_back(std::move(cycle));
        }
        return result;
    }

    // 1-indexed cycle notation, "()" for the identity.
    std::string to_cycle_string() const {
        auto cs = cycles();
        if (cs.empty()) return "()";
        std::string out;
        for (const auto& cycle : cs) {
            out += '(';
            for (std::size_t i = 0; i < cycle.size(); ++i) {
                if (i != 0) out += ',';
                out += std::to_string(cycle[i] + 1);
            }
            out += ')';
        }
        return out;
    }

    friend bool operator==(const Permutation&, const Permutation&) = default;
    friend auto operator<=>(const Permutation&, const Permutation&) = default;

private:
    std::vector<std::uint32_t> images_;
};

struct PermutationHash {
    std::size_t operator()(const Permutation& perm) const noexcept {
        std::uint64_t h = 1469598103934665603ULL;
        for (auto image : perm.images()) {
            h ^= image;
            h *= 1099511628211ULL;
        }
        return static_cast<std::size_t>(h);
    }
};

// (a∘b)(i) = a(b(i)).
inline Permutation compose(const Permutation& a, const Permutation& b) {
    if (a.degree() != b.degree()) {
        throw Error("compose: degree mismatch (" + std::to_string(a.degree()) + " vs " +
                    std::to_string(b.degree()) + ")");
    }
    std::vector<std::uint32_t> images(a.degree());
    for (std::uint32_t i = 0; i < images.size(); ++i) images[i] = a(b(i));
    return Permutation(std::move(images));
}

inline Permutation operator*(const Permutation& a, const Permutation& b) { return compose(a, b); }

inline std::uint64_t element_order(const Permutation& g) {
    std::uint64_t order = 1;
    for (const auto& cycle : g.cycles()) order = std::lcm(order, std::uint64_t{cycle.size()});
    return order;
}

// g^m for any integer m.
inline Permutation power(const Permutation& g, std::int64_t m) {
    const auto order = static_cast<std::int64_t>(element_order(g));
    std::int64_t e = ((m % order) + order) % order;
    Permutation result(g.degree());
    Permutation base = g;
    while (e > 0) {
        if (e & 1) result = compose(result, base);
        base = compose(base, base);
        e >>= 1;
    }
    return result;
}

// Parses a product of disjoint cycles such as "(3,7,5)(4,8,6)". Points are
// 1-indexed; whitespace is ignored; "" and "()" give the identity.
inline Permutation parse_cycles(std::string_view text, std::size_t degree) {
    if (degree == 0) throw ParseError("parse_cycles: degree must be positive");
    std::vector<std::uint32_t> images(degree);
    std::iota(images.begin(), images.end(), std::uint32_t{0});
    std::vector<bool> used(degree, false);

    std::size_t pos = 0;
    auto skip_ws = [&] {
        while (pos < text.size() && (text[pos] == ' ' || text[pos] == '\t' || text[pos] == '\r' ||
                                     text[pos] == '\n')) {
            ++pos;
        }
    };
    auto fail = [&](const std::string& what) -> ParseError {
        return ParseError("parse_cycles: " + what + " at offset " + std::to_string(pos) + " in \"" +
                          std::string(text) + "\"");
    };

    skip_ws();
    while (pos < text.size()) {
        if (text[pos] != '(') throw fail("expected '('");
        ++pos;
        std::vector<std::uint32_t> cycle;
        skip_ws();
        if (pos < text.size() && text[pos] == ')') {
            ++pos;
            skip_ws();
            continue;
        }
        while (true) {
            skip_ws();
            std::size_t start = pos;
            std::uint64_t value = 0;
            while (pos < text.size() && text[pos] >= '0' && text[pos] <= '9') {
                value = value * 10 + static_cast<std::uint64_t>(text[pos] - '0');
                if (value > degree) {
                    while (pos < text.size() && text[pos] >= '0' && text[pos] <= '9') ++pos;
                    break;
                }
                ++pos;
            }
            if (pos == start) throw fail("expected a point");
            if (value < 1 || value > degree) {
                throw fail("point out of range 1.." + std::to_string(degree));
            }
            auto point = static_cast<std::uint32_t>(value - 1);
            if (used[point]) throw fail("repeated point " + std::to_string(value));
            used[point] = true;
            cycle.push_back(point);
            skip_ws();
            if (pos >= text.size()) throw fail("unterminated cycle");
            if (text[pos] == ',') {
                ++pos;
                continue;
            }
            if (text[pos] == ')') {
                ++pos;
                break;
            }
            throw fail("expected ',' or ')'");
        }
        for (std::size_t i = 0; i < cycle.size(); ++i) {
            images[cycle[i]] = cycle[(i + 1) % cycle.size()];
        }
        skip_ws();
    }
    return Permutation(std::move(images));
}

struct ConjClass {
    Permutation representative;
    std::size_t representative_index = 0;  // position in FiniteGroup::elements()
    std::size_t size = 0;
    std::uint64_t element_order = 1;
    std::vector<std::size_t> members;  // sorted element indices
};

class FiniteGroup;
FiniteGroup generate(const std::vector<Permutation>& generators, std::size_t cap);

// A permutation group stored with its complete element list. Immutable after
// construction. Element 0 is always the identity.
class FiniteGroup {
public:
    static constexpr std::size_t kDefaultCap = 100000;
    static constexpr std::size_t kTableLimit = 1024;

    const std::vector<Permutation>& generators() const noexcept { return generators_; }
    const std::vector<Permutation>& elements() const noexcept { return elements_; }
    const Permutation& element(std::size_t i) const { return elements_[i]; }
    std::size_t order() const noexcept { return elements_.size(); }
    std::size_t degree() const noexcept { return elements_.front().degree(); }
    const std::vector<ConjClass>& classes() const noexcept { return classes_; }
    std::size_t class_count() const noexcept { return classes_.size(); }
    std::uint64_t exponent() const noexcept { return exponent_; }
    std::size_t identity_index() const noexcept { return 0; }

    std::optional<std::size_t> index_of(const Permutation& g) const {
        auto it = index_.find(g);
        if (it == index_.end()) return std::nullopt;
        return it->second;
    }

    bool contains(const Permutation& g) const { return index_.contains(g); }

    // Index of element(i)∘element(j).
    std::size_t multiply(std::size_t i, std::size_t j) const {
        if (!table_.empty()) return table_[i * order() + j];
        return index_.at(compose(elements_[i], elements_[j]));
    }

    std::size_t inverse(std::size_t i) const { return inverses_[i]; }
    std::uint64_t element_order(std::size_t i) const { return orders_[i]; }
    std::size_t class_of(std::size_t element_index) const { return class_of_[element_index]; }

    std::optional<std::size_t> class_of(const Permutation& g) const {
        auto idx = index_of(g);
        if (!idx) return std::nullopt;
        return class_of_[*idx];
    }

    // Indices of the generators inside elements().
    const std::vector<std::size_t>& generator_indices() const noexcept { return generator_indices_; }

    // Index of the class containing representative^m.
    std::size_t power_class(std::size_t class_index, std::int64_t m) const {
        const auto& cls = classes_.at(class_index);
        const auto order = static_cast<std::int64_t>(cls.element_order);
        std::int64_t e = ((m % order) + order) % order;
        std::size_t result = identity_index();
        std::size_t base = cls.representative_index;
        while (e > 0) {
            if (e & 1) result = multiply(result, base);
            base = multiply(base, base);
            e >>= 1;
        }
        return class_of_[result];
    }

    friend FiniteGroup generate(const std::vector<Permutation>& generators, std::size_t cap);

private:
    FiniteGroup() = default;

    std::vector<Permutation> generators_;
    std::vector<std::size_t> generator_indices_;
    std::vector<Permutation> elements_;
    std::unordered_map<Permutation, std::size_t, PermutationHash> index_;
    std::vector<std::uint32_t> table_;
    std::vector<std::size_t> inverses_;
    std::vector<std::uint64_t> orders_;
    std::vector<ConjClass> classes_;
    std::vector<std::size_t> class_of_;
    std::uint64_t exponent_ = 1;

    void compute_classes();
};

inline void FiniteGroup::compute_classes() {
    const std::size_t n = order();
    std::vector<std::size_t> owner(n, n);
    std::vector<ConjClass> found;
    for (std::size_t start = 0; start < n; ++start) {
        if (owner[start] != n) continue;
        ConjClass cls;
        cls.representative = elements_[start];
        cls.representative_index = start;
        cls.element_order = orders_[start];
        std::vector<std::size_t> frontier{start};
        owner[start] = found.size();
        cls.members.push_back(start);
        while (!frontier.empty()) {
            std::size_t x = frontier.back();
            frontier.pop_back();
            for (std::size_t g : generator_indices_) {
                std::size_t y = multiply(multiply(g, x), inverses_[g]);
                if (owner[y] == n) {
                    owner[y] = found.size();
                    cls.members.push_back(y);
                    frontier.push_back(y);
                }
            }
        }
        std::sort(cls.members.begin(), cls.members.end());
        cls.size = cls.members.size();
        found.push_back(std::move(cls));
    }
    std::sort(found.begin(), found.end(), [](const ConjClass& a, const ConjClass& b) {
        return std::tie(a.element_order, a.size, a.representative_index) <
               std::tie(b.element_order, b.size, b.representative_index);
    });
    class_of_.assign(n, 0);
    for (std::size_t c = 0; c < found.size(); ++c) {
        for (std::size_t m : found[c].members) class_of_[m] = c;
    }
    classes_ = std::move(found);
}

// Breadth-first closure of the generators under right multiplication.
inline FiniteGroup generate(const std::vector<Permutation>& generators,
                            std::size_t cap = FiniteGroup::kDefaultCap) {
    if (generators.empty()) throw Error("generate: empty generator list");
    const std::size_t degree = generators.front().degree();
    if (degree == 0) throw Error("generate: degree must be positive");
    for (const auto& g : generators) {
        if (g.degree() != degree) throw Error("generate: generators have different degrees");
    }

    FiniteGroup group;
    group.generators_ = generators;
    group.elements_.emplace_back(degree);
    group.index_.emplace(group.elements_.front(), 0);
    for (std::size_t head = 0; head < group.elements_.size(); ++head) {
        for (const auto& g : generators) {
            Permutation next = compose(group.elements_[head], g);
            if (group.index_.contains(next)) continue;
            if (group.elements_.size() >= cap) {
                throw Error("generate: group order exceeds cap " + std::to_string(cap));
            }
            group.index_.emplace(next, group.elements_.size());
            group.elements_.push_back(std::move(next));
        }
    }

    const std::size_t n = group.elements_.size();
    if (n <= FiniteGroup::kTableLimit) {
        group.table_.resize(n * n);
        for (std::size_t i = 0; i < n; ++i) {
            for (std::size_t j = 0; j < n; ++j) {
                group.table_[i * n + j] = static_cast<std::uint32_t>(
                    group.index_.at(compose(group.elements_[i], group.elements_[j])));
            }
        }
    }
    group.inverses_.resize(n);
    group.orders_.resize(n);
    for (std::size_t i = 0; i < n; ++i) {
        group.inverses_[i] = group.index_.at(group.elements_[i].inverse());
        group.orders_[i] = element_order(group.elements_[i]);
        group.exponent_ = std::lcm(group.exponent_, group.orders_[i]);
    }
    for (const auto& g : generators) group.generator_indices_.push_back(group.index_.at(g));
    group.compute_classes();
    return group;
}

inline const std::vector<ConjClass>& conjugacy_classes(const FiniteGroup& group) {
    return group.classes();
}

inline std::size_t power_class(const FiniteGroup& group, std::size_t class_index, std::int64_t m) {
    return group.power_class(class_index, m);
}

// SL(3,2) inside S8 on the generators (3,7,5)(4,8,6) and (1,2,6)(3,4,8).
inline FiniteGroup builtin_sl32_on_s8() {
    return generate({parse_cycles("(3,7,5)(4,8,6)", 8), parse_cycles("(1,2,6)(3,4,8)", 8)});
}

// GL(3,2) acting on the seven nonzero vectors of F_2^3; vector v (as a 3-bit
// integer, bit i = coordinate i) is point v.
inline FiniteGroup builtin_sl32_on_p2f2() {
    using Matrix3 = std::array<std::array<unsigned, 3>, 3>;
    auto as_permutation = [](const Matrix3& m) {
        std::vector<std::uint32_t> images(7);
        for (unsigned v = 1; v <= 7; ++v) {
            unsigned image = 0;
            for (unsigned row = 0; row < 3; ++row) {
                unsigned bit = 0;
                for (unsigned col = 0; col < 3; ++col) bit ^= m[row][col] & ((v >> col) & 1U);
                image |= bit << row;
            }
            images[v - 1] = image - 1;
        }
        return Permutation(std::move(images));
    };
    const Matrix3 cyclic_shift{{{0, 1, 0}, {0, 0, 1}, {1, 0, 0}}};
    const Matrix3 transvection{{{1, 1, 0}, {0, 1, 0}, {0, 0, 1}}};
    FiniteGroup group = generate({as_permutation(cyclic_shift), as_permutation(transvection)});
    if (group.order() != 168) {
        throw InvariantError("builtin_sl32_on_p2f2: generators produced order " +
                             std::to_string(group.order()) + ", expected 168");
    }
    return group;
}

// Natural action of S5.
inline FiniteGroup builtin_s5() {
    return generate({parse_cycles("(1,2,3,4,5)", 5), parse_cycles("(1,2)", 5)});
}

// Group file: line "degree N", then one generator per line in cycle notation.
// Lines starting with '#' and blank lines are ignored. No generator lines
// gives the trivial group.
inline FiniteGroup parse_group_file(std::string_view text, std::size_t cap = FiniteGroup::kDefaultCap) {
    std::istringstream in{std::string(text)};
    std::string line;
    std::optional<std::size_t> degree;
    std::vector<Permutation> generators;
    std::size_t line_no = 0;
    while (std::getline(in, line)) {
        ++line_no;
        auto first = line.find_first_not_of(" \t\r");
        if (first == std::string::npos || line[first] == '#') continue;
        std::string_view body(line);
        body.remove_prefix(first);
        if (!degree) {
            std::istringstream header{std::string(body)};
            std::string keyword;
            long long n = 0;
            std::string rest;
            if (!(header >> keyword >> n) || keyword != "degree" || n <= 0 || (header >> rest)) {
                throw ParseError("group file line " + std::to_string(line_no) +
                                 ": expected \"degree N\"");
            }
            degree = static_cast<std::size_t>(n);
            continue;
        }
        try {
            generators.push_back(parse_cycles(body, *degree));
        } catch (const ParseError& e) {
            throw ParseError("group file line " + std::to_string(line_no) + ": " + e.what());
        }
    }
    if (!degree) throw ParseError("group file: missing \"degree N\" header");
    if (generators.empty()) generators.emplace_back(*degree);
    return generate(generators, cap);
}

inline FiniteGroup load_group_file(const std::string& path, std::size_t cap = FiniteGroup::kDefaultCap) {
    std::ifstream in(path);
    if (!in) throw ParseError("cannot open group file " + path);
    std::stringstream buffer;
    buffer << in.rdbuf();
    return parse_group_file(buffer.str(), cap);
}

}  // namespace fqg

#endif  // FQG_PERM_HPP
