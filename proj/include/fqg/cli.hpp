#ifndef FQG_CLI_HPP
#define FQG_CLI_HPP

// Command-line front end: classes, decompose, oracle, check, units.
//
// Exit codes: 0 success, 1 check mismatch, 2 input or parse error,
// 3 modular case (p divides |G|), 4 analytic solution not unique.

#include <chrono>
#include <cstdint>
#include <iomanip>
#include <optional>
#include <ostream>
#include <sstream>
#include <string>
#include <vector>

#include <CLI11.hpp>
#include <json.hpp>

#include "fqg/charkit.hpp"
#include "fqg/cyclo.hpp"
#include "fqg/error.hpp"
#include "fqg/oracle.hpp"
#include "fqg/perm.hpp"
#include "fqg/units.hpp"
#include "fqg/wedder.hpp"

namespace fqg::cli {

enum ExitCode : int {
    kSuccess = 0,
    kMismatch = 1,
    kInputError = 2,
    kModularCase = 3,
    kNotUnique = 4,
};

struct RunConfig {
    std::string command;
    std::string group = "builtin:sl32-s8";
    std::string p_spec;
    std::string k_spec = "1";
    std::uint64_t seed = 0;
    std::string format = "text";
    bool with_oracle = false;
    std::uint64_t qmax = 1000000;
    int verbosity = 0;
};

// "11", "11,13", "11..199", "1..6,9": explicit values are kept as given,
// ranges are expanded inclusively.
struct NumberList {
    std::vector<std::uint64_t> values;
    std::vector<bool> from_range;
};

inline NumberList parse_number_list(const std::string& spec) {
    NumberList out;
    std::stringstream in(spec);
    std::string item;
    auto to_number = [&](const std::string& s) -> std::uint64_t {
        if (s.empty() || s.find_first_not_of("0123456789") != std::string::npos || s.size() > 18) {
            throw ParseError("invalid number \"" + s + "\" in \"" + spec + "\"");
        }
        return std::stoull(s);
    };
    while (std::getline(in, item, ',')) {
        auto first = item.find_first_not_of(' ');
        auto last = item.find_last_not_of(' ');
        if (first == std::string::npos) throw ParseError("empty entry in \"" + spec + "\"");
        item = item.substr(first, last - first + 1);
        auto dots = item.find("..");
        if (dots == std::string::npos) {
            out.values.push_back(to_number(item));
            out.from_range.push_back(false);
            continue;
        }
        auto lo = to_number(item.substr(0, dots));
        auto hi = to_number(item.substr(dots + 2));
        if (lo > hi) throw ParseError("empty range \"" + item + "\"");
        if (hi - lo > 100000) throw ParseError("range too large \"" + item + "\"");
        for (auto v = lo; v <= hi; ++v) {
            out.values.push_back(v);
            out.from_range.push_back(true);
        }
    }
    if (out.values.empty()) throw ParseError("empty list \"" + spec + "\"");
    return out;
}

struct LoadedGroup {
    FiniteGroup group;
    std::string name;
};

inline LoadedGroup load_group(const std::string& source) {
    if (source == "builtin:sl32-s8") return {builtin_sl32_on_s8(), source};
    if (source == "builtin:sl32-p2f2") return {builtin_sl32_on_p2f2(), source};
    if (source == "builtin:s5") return {builtin_s5(), source};
    if (source.starts_with("file:")) return {load_group_file(source.substr(5)), source};
    throw ParseError("unknown group source \"" + source +
                     "\" (expected builtin:sl32-s8, builtin:sl32-p2f2, builtin:s5 or file:PATH)");
}

inline std::uint64_t single_value(const std::string& spec, const char* what) {
    auto list = parse_number_list(spec);
    if (list.values.size() != 1) throw ParseError(std::string("--") + what + " takes a single value");
    return list.values.front();
}

inline void require_prime(std::uint64_t p) {
    if (!is_prime(p)) throw ParseError("p = " + std::to_string(p) + " is not prime");
}

inline std::optional<int> sl32_type(const FiniteGroup& group, std::uint64_t p, unsigned k) {
    if (!has_sl32_class_data(group)) return std::nullopt;
    return classify_type_for(group, p, k);
}

inline std::string field_name(std::uint64_t p, unsigned k) {
    return std::to_string(p) + "^" + std::to_string(k);
}

inline int cmd_classes(const RunConfig& cfg, std::ostream& out) {
    auto loaded = load_group(cfg.group);
    const auto& g = loaded.group;
    if (cfg.format == "json") {
        nlohmann::ordered_json j;
        j["group"] = loaded.name;
        j["degree"] = g.degree();
        j["order"] = g.order();
        j["exponent"] = g.exponent();
        j["classes"] = nlohmann::ordered_json::array();
        for (const auto& c : g.classes()) {
            j["classes"].push_back({{"representative", c.representative.to_cycle_string()},
                                    {"order", c.element_order},
                                    {"size", c.size}});
        }
        out << j.dump(2) << "\n";
        return kSuccess;
    }
    out << "group " << loaded.name << ": degree " << g.degree() << ", order " << g.order() << ", "
        << g.class_count() << " classes, exponent " << g.exponent() << "\n";
    out << std::left << std::setw(6) << "class" << std::setw(28) << "representative" << std::setw(7) << "order"
        << "size\n";
    for (std::size_t i = 0; i < g.class_count(); ++i) {
        const auto& c = g.classes()[i];
        out << std::left << std::setw(6) << ("C" + std::to_string(i + 1)) << std::setw(28)
            << c.representative.to_cycle_string() << std::setw(7) << c.element_order << c.size << "\n";
    }
    return kSuccess;
}

inline nlohmann::ordered_json components_json(const std::vector<Component>& components) {
    auto arr = nlohmann::ordered_json::array();
    for (const auto& c : components) arr.push_back({{"n", c.n}, {"d", c.d}});
    return arr;
}

inline int cmd_decompose(const RunConfig& cfg, std::ostream& out, bool with_units) {
    auto loaded = load_group(cfg.group);
    const auto& g = loaded.group;
    const auto p = single_value(cfg.p_spec, "p");
    const auto k = static_cast<unsigned>(single_value(cfg.k_spec, "k"));
    require_prime(p);
    if (k == 0) throw ParseError("k must be positive");
    auto result = analytic_decomposition(g, p, k, default_actions(g));
    const auto& report = result.report;
    auto type = sl32_type(g, p, k);

    if (!report.unique) {
        if (cfg.format == "json") {
            nlohmann::ordered_json j;
            j["q"] = {{"p", p}, {"k", k}};
            j["unique"] = false;
            j["candidates"] = nlohmann::ordered_json::array();
            for (const auto& s : report.solutions) j["candidates"].push_back(components_json(s.components));
            out << j.dump(2) << "\n";
        } else {
            out << "analytic solution not unique: " << report.solutions.size() << " candidates\n";
            for (const auto& s : report.solutions) out << "  " << components_to_string(s.components) << "\n";
        }
        return kNotUnique;
    }

    const auto& dec = report.solutions.front();
    if (cfg.format == "json") {
        nlohmann::ordered_json j;
        if (with_units) {
            j = unit_report_json(dec, type);
        } else {
            j["q"] = {{"p", p}, {"k", k}};
            j["type"] = type ? nlohmann::ordered_json(*type) : nlohmann::ordered_json(nullptr);
            j["components"] = components_json(dec.components);
            j["splitting_field"] = splitting_field_check(dec);
        }
        out << j.dump(2) << "\n";
        return kSuccess;
    }

    if (with_units) {
        auto units = unit_group(dec);
        out << "unit group: " << units.to_string() << ", order " << units.total_order.str() << "\n";
        if (type) out << "type: " << *type << "\n";
        return kSuccess;
    }
    out << "q = " << field_name(p, k) << "\n";
    out << "cyclotomic classes: " << result.shape.count << ", degrees";
    for (auto d : result.shape.degrees) out << " " << d;
    out << "\n";
    out << "forced components: " << components_to_string(result.forced) << "\n";
    out << "components: " << components_to_string(dec.components) << "\n";
    out << "decomposition: " << dec.to_string() << "\n";
    if (type) out << "type: " << *type << "\n";
    out << "splitting field: " << (splitting_field_check(dec) ? "yes" : "no") << "\n";
    return kSuccess;
}

inline int cmd_oracle(const RunConfig& cfg, std::ostream& out) {
    auto loaded = load_group(cfg.group);
    const auto& g = loaded.group;
    const auto p = single_value(cfg.p_spec, "p");
    const auto k = static_cast<unsigned>(single_value(cfg.k_spec, "k"));
    require_prime(p);
    if (k == 0) throw ParseError("k must be positive");
    if (g.order() % p == 0) throw ModularCaseError(p, g.order());
    auto q = checked_power(p, k);
    if (!q || *q > cfg.qmax) {
        throw ParseError("q = " + field_name(p, k) + " exceeds --qmax " + std::to_string(cfg.qmax));
    }
    const auto start = std::chrono::steady_clock::now();
    auto result = run_oracle(g, p, k, cfg.seed, true);
    const double seconds = std::chrono::duration<double>(std::chrono::steady_clock::now() - start).count();
    auto type = sl32_type(g, p, k);
    if (cfg.format == "json") {
        nlohmann::ordered_json j;
        j["q"] = {{"p", p}, {"k", k}};
        j["type"] = type ? nlohmann::ordered_json(*type) : nlohmann::ordered_json(nullptr);
        j["components"] = components_json(result.components);
        j["verified"] = result.verified;
        out << j.dump(2) << "\n";
    } else {
        out << "q = " << field_name(p, k) << "\n";
        out << "blocks: " << result.components.size() << "\n";
        out << "components: " << components_to_string(result.components) << "\n";
        if (type) out << "type: " << *type << "\n";
        out << "verified: " << (result.verified ? "yes" : "no") << "\n";
        out << "time: " << std::fixed << std::setprecision(3) << seconds << " s\n";
    }
    return result.verified ? kSuccess : kMismatch;
}

struct CheckCell {
    std::uint64_t p = 0;
    unsigned k = 0;
    bool passed = true;
    std::vector<std::string> problems;
    std::optional<int> type;
    bool oracle_run = false;
};

inline CheckCell check_cell(const FiniteGroup& g, std::uint64_t p, unsigned k, const RunConfig& cfg) {
    CheckCell cell{p, k, true, {}, std::nullopt, false};
    auto fail = [&](std::string why) {
        cell.passed = false;
        cell.problems.push_back(std::move(why));
    };
    auto result = analytic_decomposition(g, p, k, default_actions(g));
    if (!result.report.unique) {
        fail("analytic solution not unique (" + std::to_string(result.report.solutions.size()) + " candidates)");
        return cell;
    }
    const auto& dec = result.report.solutions.front();
    if (dec.total_dimension() != g.order()) fail("dimension sum differs from |G|");

    if (has_sl32_class_data(g)) {
        cell.type = classify_type_for(g, p, k);
        auto row = table_row(p, k);
        if (!row) {
            fail("no table row for p mod 7 = " + std::to_string(p % 7));
        } else {
            if (*cell.type != row->type) fail("type " + std::to_string(*cell.type) + " but table says " +
                                              std::to_string(row->type));
            auto expected = table_components(row->type);
            canonicalize(expected);
            if (dec.components != expected) fail("components " + components_to_string(dec.components) +
                                                 " differ from table " + components_to_string(expected));
            auto units = unit_group(dec).to_string();
            auto table_units = table_unit_group_string(row->type, p, k);
            if (units != table_units) fail("unit group " + units + " differs from table " + table_units);
            if (splitting_field_check(dec) != (row->type == 1)) fail("splitting-field verdict disagrees with type");
        }
    }

    if (cfg.with_oracle) {
        auto q = checked_power(p, k);
        if (q && *q <= cfg.qmax) {
            cell.oracle_run = true;
            auto oracle = run_oracle(g, p, k, cfg.seed, true);
            if (!oracle.verified) fail("oracle split failed verification");
            if (oracle.components != dec.components) {
                fail("oracle " + components_to_string(oracle.components) + " differs from analytic " +
                     components_to_string(dec.components));
            }
        }
    }
    return cell;
}

inline int cmd_check(const RunConfig& cfg, std::ostream& out) {
    auto loaded = load_group(cfg.group);
    const auto& g = loaded.group;
    auto ps = parse_number_list(cfg.p_spec.empty() ? "11..199" : cfg.p_spec);
    auto ks = parse_number_list(cfg.k_spec.empty() ? "1..12" : cfg.k_spec);

    std::vector<std::uint64_t> primes;
    std::size_t skipped = 0;
    for (std::size_t i = 0; i < ps.values.size(); ++i) {
        const auto p = ps.values[i];
        if (!is_prime(p)) {
            if (!ps.from_range[i]) throw ParseError("p = " + std::to_string(p) + " is not prime");
            continue;
        }
        if (g.order() % p == 0) {
            if (!ps.from_range[i]) throw ModularCaseError(p, g.order());
            ++skipped;
            continue;
        }
        primes.push_back(p);
    }
    for (auto k : ks.values) {
        if (k == 0) throw ParseError("k must be positive");
    }

    std::vector<CheckCell> cells;
    for (auto p : primes) {
        for (auto k : ks.values) cells.push_back(check_cell(g, p, static_cast<unsigned>(k), cfg));
    }
    std::size_t passed = 0, failed = 0, oracle_runs = 0;
    for (const auto& c : cells) {
        (c.passed ? passed : failed)++;
        oracle_runs += c.oracle_run;
    }

    if (cfg.format == "json") {
        nlohmann::ordered_json j;
        j["group"] = loaded.name;
        j["cells"] = nlohmann::ordered_json::array();
        for (const auto& c : cells) {
            nlohmann::ordered_json cell{{"p", c.p}, {"k", c.k}, {"passed", c.passed}};
            cell["type"] = c.type ? nlohmann::ordered_json(*c.type) : nlohmann::ordered_json(nullptr);
            cell["oracle"] = c.oracle_run;
            cell["problems"] = c.problems;
            j["cells"].push_back(std::move(cell));
        }
        j["passed"] = passed;
        j["failed"] = failed;
        j["skipped_primes"] = skipped;
        j["oracle_runs"] = oracle_runs;
        out << j.dump(2) << "\n";
    } else {
        for (const auto& c : cells) {
            if (c.passed && cfg.verbosity == 0) continue;
            out << (c.passed ? "PASS" : "FAIL") << " p=" << c.p << " k=" << c.k;
            if (c.type) out << " type=" << *c.type;
            if (c.oracle_run) out << " oracle";
            for (const auto& why : c.problems) out << "\n    " << why;
            out << "\n";
        }
        out << "checked " << cells.size() << " cells: " << passed << " passed, " << failed << " failed, "
            << oracle_runs << " with oracle, " << skipped << " primes skipped (divide |G|)\n";
    }
    return failed == 0 ? kSuccess : kMismatch;
}

// Runs the CLI with argv-style arguments, writing to the given streams.
inline int run(int argc, const char* const* argv, std::ostream& out, std::ostream& err) {
    CLI::App app{"Wedderburn decompositions and unit groups of semisimple group algebras F_qG", "fqg"};
    app.require_subcommand(1);
    RunConfig cfg;

    auto add_common = [&](CLI::App* sub, bool needs_field) {
        sub->add_option("--group", cfg.group, "builtin:sl32-s8 | builtin:sl32-p2f2 | builtin:s5 | file:PATH")
            ->capture_default_str();
        sub->add_option("--format", cfg.format, "output format")
            ->check(CLI::IsMember({"text", "json"}))
            ->capture_default_str();
        sub->add_flag("-v,--verbose", cfg.verbosity, "more output");
        if (needs_field) {
            sub->add_option("--p", cfg.p_spec, "characteristic");
            sub->add_option("--k", cfg.k_spec, "extension degree, q = p^k")->capture_default_str();
            sub->add_option("--seed", cfg.seed, "seed for all randomized steps")->capture_default_str();
            sub->add_option("--qmax", cfg.qmax, "largest field size the oracle accepts")->capture_default_str();
        }
    };

    auto* classes = app.add_subcommand("classes", "conjugacy classes of the group");
    add_common(classes, false);
    auto* decompose = app.add_subcommand("decompose", "analytic Wedderburn decomposition");
    add_common(decompose, true);
    decompose->get_option("--p")->required();
    auto* oracle = app.add_subcommand("oracle", "brute-force decomposition of the regular algebra");
    add_common(oracle, true);
    oracle->get_option("--p")->required();
    auto* units = app.add_subcommand("units", "unit group structure and order");
    add_common(units, true);
    units->get_option("--p")->required();
    auto* check = app.add_subcommand("check", "compare the analytic pipeline with the reference table");
    add_common(check, true);
    check->get_option("--k")->default_str("1..12");
    check->add_flag("--with-oracle", cfg.with_oracle, "also run the oracle where q <= qmax");
    cfg.k_spec.clear();

    try {
        app.parse(argc, argv);
    } catch (const CLI::CallForHelp&) {
        out << app.help();
        return kSuccess;
    } catch (const CLI::ParseError& e) {
        err << "error: " << e.what() << "\n";
        return kInputError;
    }

    try {
        if (cfg.k_spec.empty() && !check->parsed()) cfg.k_spec = "1";
        if (classes->parsed()) return cmd_classes(cfg, out);
        if (decompose->parsed()) return cmd_decompose(cfg, out, false);
        if (units->parsed()) return cmd_decompose(cfg, out, true);
        if (oracle->parsed()) return cmd_oracle(cfg, out);
        if (check->parsed()) return cmd_check(cfg, out);
    } catch (const ModularCaseError& e) {
        err << "error: " << e.what() << "\n";
        return kModularCase;
    } catch (const Error& e) {
        err << "error: " << e.what() << "\n";
        return kInputError;
    }
    return kInputError;
}

}  // namespace fqg::cli

#endif  // FQG_CLI_HPP
