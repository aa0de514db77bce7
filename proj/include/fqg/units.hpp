#ifndef FQG_UNITS_HPP
#define FQG_UNITS_HPP

// Unit group of a semisimple group algebra as the direct product of the unit
// groups of its matrix components, with exact orders.

#include <cstddef>
#include <cstdint>
#include <optional>
#include <set>
#include <string>
#include <vector>

#include <json.hpp>

#include "fqg/error.hpp"
#include "fqg/numeric.hpp"
#include "fqg/wedder.hpp"

namespace fqg {

// |GL(n, q)| = Π_{i<n} (q^n - q^i).
inline BigInt gl_order(std::uint64_t n, const BigInt& q) {
    if (n == 0) throw Error("gl_order: n must be positive");
    if (q < 2) throw Error("gl_order: q must be at least 2");
    const BigInt qn = boost::multiprecision::pow(q, static_cast<unsigned>(n));
    BigInt order = 1;
    BigInt qi = 1;
    for (std::uint64_t i = 0; i < n; ++i) {
        order *= qn - qi;
        qi *= q;
    }
    return order;
}

struct UnitFactor {
    std::uint64_t n = 1;
    std::uint64_t d = 1;
    BigInt field_size;  // q^d
    std::string display;
};

struct UnitGroupReport {
    std::vector<UnitFactor> factors;  // ordered by (d, n)
    BigInt total_order;

    // Factors joined by " × ", repeated factors written with an exponent,
    // e.g. "F_11^× × GL(3,11)^2 × GL(6,11)".
    std::string to_string() const {
        std::string out;
        for (std::size_t i = 0; i < factors.size();) {
            std::size_t j = i;
            while (j < factors.size() && factors[j].display == factors[i].display) ++j;
            if (!out.empty()) out += " × ";
            out += factors[i].display;
            if (j - i > 1) out += "^" + std::to_string(j - i);
            i = j;
        }
        return out;
    }
};

inline std::string unit_factor_display(std::uint64_t n, const BigInt& field_size) {
    if (n == 1) return "F_" + field_size.str() + "^×";
    return "GL(" + std::to_string(n) + "," + field_size.str() + ")";
}

inline UnitGroupReport unit_group(const Decomposition& dec, std::uint64_t p, unsigned k) {
    const BigInt q = big_pow(p, k);
    UnitGroupReport report;
    report.total_order = 1;
    auto components = dec.components;
    canonicalize(components);
    for (const auto& c : components) {
        UnitFactor factor;
        factor.n = c.n;
        factor.d = c.d;
        factor.field_size = boost::multiprecision::pow(q, static_cast<unsigned>(c.d));
        factor.display = unit_factor_display(c.n, factor.field_size);
        report.total_order *= gl_order(c.n, factor.field_size);
        report.factors.push_back(std::move(factor));
    }
    return report;
}

inline UnitGroupReport unit_group(const Decomposition& dec) { return unit_group(dec, dec.p, dec.k); }

// One row of the unit-group table for F_q SL(3,2): the residues of
// p mod 7 it covers, the residue of k mod 6, and the decomposition type.
struct TableRow {
    std::set<unsigned> p_mod_7;
    unsigned k_mod_6 = 0;
    int type = 1;
};

inline const std::vector<TableRow>& unit_table() {
    static const std::vector<TableRow> rows{
        {{1, 2, 3, 4, 5, 6}, 0, 1},  // ±1, ±2, ±3 / 6l
        {{1, 2, 4}, 1, 1},           // 1, 2, -3 / 6l+1
        {{3, 5, 6}, 1, 2},           // -1, -2, 3 / 6l+1
        {{1, 2, 3, 4, 5, 6}, 2, 1},  // 6l+2
        {{1, 2, 4}, 3, 1},           // 6l+3
        {{3, 5, 6}, 3, 2},
        {{1, 2, 3, 4, 5, 6}, 4, 1},  // 6l+4
        {{1, 2, 4}, 5, 1},           // 6l+5
        {{3, 5, 6}, 5, 2},
    };
    return rows;
}

inline std::optional<TableRow> table_row(std::uint64_t p, unsigned k) {
    for (const auto& row : unit_table()) {
        if (row.k_mod_6 == k % 6 && row.p_mod_7.contains(static_cast<unsigned>(p % 7))) return row;
    }
    return std::nullopt;
}

// Components listed in the table for each type.
inline std::vector<Component> table_components(int type) {
    if (type == 1) return {{1, 1}, {3, 1}, {3, 1}, {6, 1}, {7, 1}, {8, 1}};
    if (type == 2) return {{1, 1}, {6, 1}, {7, 1}, {8, 1}, {3, 2}};
    throw Error("table_components: type must be 1 or 2");
}

// The table's unit group with q substituted, in UnitGroupReport::to_string form.
inline std::string table_unit_group_string(int type, std::uint64_t p, unsigned k) {
    Decomposition dec{table_components(type), 168, p, k};
    canonicalize(dec.components);
    return unit_group(dec).to_string();
}

// {"q": {"p", "k"}, "type", "components": [{"n", "d"}],
//  "unit_group": [{"n", "field": "p^(k*d)"}], "order": "<decimal>"}.
// type is null for groups other than SL(3,2).
inline nlohmann::ordered_json unit_report_json(const Decomposition& dec, std::optional<int> type) {
    nlohmann::ordered_json j;
    j["q"] = {{"p", dec.p}, {"k", dec.k}};
    j["type"] = type ? nlohmann::ordered_json(*type) : nlohmann::ordered_json(nullptr);
    j["components"] = nlohmann::ordered_json::array();
    for (const auto& c : dec.components) j["components"].push_back({{"n", c.n}, {"d", c.d}});
    auto report = unit_group(dec);
    j["unit_group"] = nlohmann::ordered_json::array();
    for (const auto& f : report.factors) {
        j["unit_group"].push_back(
            {{"n", f.n}, {"field", std::to_string(dec.p) + "^" + std::to_string(dec.k * f.d)}});
    }
    j["order"] = report.total_order.str();
    return j;
}

}  // namespace fqg

#endif  // FQG_UNITS_HPP
