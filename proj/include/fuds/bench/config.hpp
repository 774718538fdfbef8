#pragma once

#include <algorithm>
#include <cstddef>
#include <cstdint>
#include <cstdlib>
#include <map>
#include <optional>
#include <set>
#include <sstream>
#include <stdexcept>
#include <string>
#include <string_view>
#include <vector>

#include "fuds/schemes.hpp"

namespace fuds::bench {

/// Which problem an experiment runs and where its data comes from.
/// Exactly one source applies: deceptive2d is parameterised inline, tsp is
/// either generated (cities + seed) or loaded, scp and max3sat are loaded.
struct ProblemSpec {
    enum class Kind { deceptive2d, tsp, scp, max3sat };

    Kind kind = Kind::deceptive2d;
    std::string instance_path;
    std::size_t tsp_cities = 0; // 0 = instance comes from instance_path
    std::uint64_t tsp_seed = 1;
    double deceptive_a = 0.2;
    double deceptive_b = 0.3;
    double deceptive_delta = 0.0;
};

inline const char* to_string(ProblemSpec::Kind k) {
    switch (k) {
    case ProblemSpec::Kind::deceptive2d: return "deceptive2d";
    case ProblemSpec::Kind::tsp: return "tsp";
    case ProblemSpec::Kind::scp: return "scp";
    default: return "max3sat";
    }
}

/// A full experiment: one problem, a grid of scheme cells (selection x
/// deletion x capacity), shared run parameters, and output destinations.
/// Run r of every cell is seeded base_seed + r, so cells share random
/// numbers and per-run differences come from the schemes alone.
struct ExperimentConfig {
    ProblemSpec problem;
    std::vector<Selection> selections;
    std::vector<Deletion> deletions{Deletion::random, Deletion::fuds};
    std::vector<std::size_t> capacities;
    std::optional<std::size_t> initial_size; // absent = capacity
    double crossover_prob = 0.5;
    double mutation_prob = 0.5;
    std::optional<std::size_t> level_count; // absent = round(sqrt(capacity))
    StopRule stop;
    std::size_t repetitions = 1;
    std::uint64_t base_seed = 1;
    std::optional<std::uint64_t> diversity_cadence; // absent = max(1, capacity/10)
    double top_band_width = 20.0;
    std::string out = "results.csv";
    std::string diversity_out;  // empty = not written
    std::string histogram_out;  // empty = not written
};

/// Invalid configuration, carrying every violation found rather than only
/// the first: a config is usually edited in one sitting and should fail in
/// one sitting too.
class ConfigError : public std::runtime_error {
public:
    explicit ConfigError(std::vector<std::string> violations)
        : std::runtime_error(join(violations)), violations_(std::move(violations)) {}

    const std::vector<std::string>& violations() const { return violations_; }

private:
    static std::string join(const std::vector<std::string>& v) {
        std::string out = "invalid configuration:";
        for (const auto& s : v) {
            out += "\n  - ";
            out += s;
        }
        return out;
    }

    std::vector<std::string> violations_;
};

namespace detail {

inline std::string trim(std::string_view s) {
    const auto b = s.find_first_not_of(" \t\r");
    if (b == std::string_view::npos) return {};
    const auto e = s.find_last_not_of(" \t\r");
    return std::string(s.substr(b, e - b + 1));
}

inline bool parse_ll(const std::string& s, long long& out) {
    if (s.empty()) return false;
    char* end = nullptr;
    out = std::strtoll(s.c_str(), &end, 10);
    return end != s.c_str() && *end == '\0';
}

inline bool parse_u64(const std::string& s, std::uint64_t& out) {
    if (s.empty() || s[0] == '-') return false;
    char* end = nullptr;
    out = std::strtoull(s.c_str(), &end, 10);
    return end != s.c_str() && *end == '\0';
}

inline bool parse_real(const std::string& s, double& out) {
    if (s.empty()) return false;
    char* end = nullptr;
    out = std::strtod(s.c_str(), &end);
    return end != s.c_str() && *end == '\0';
}

inline std::vector<std::string> split_list(const std::string& s) {
    std::vector<std::string> out;
    std::size_t start = 0;
    while (start <= s.size()) {
        const auto comma = s.find(',', start);
        const auto end = comma == std::string::npos ? s.size() : comma;
        out.push_back(trim(std::string_view(s).substr(start, end - start)));
        if (comma == std::string::npos) break;
        start = comma + 1;
    }
    return out;
}

} // namespace detail

/// Parse the line-oriented `key = value` experiment format. '#' starts a
/// comment; blank lines are skipped; keys may appear once. Every violation
/// is collected and reported together in the thrown ConfigError.
inline ExperimentConfig parse_config(std::string_view text) {
    using detail::parse_ll;
    using detail::parse_real;
    using detail::parse_u64;
    using detail::split_list;
    using detail::trim;

    std::vector<std::string> violations;
    std::map<std::string, std::string> kv;

    std::istringstream lines{std::string(text)};
    std::string line;
    std::size_t line_no = 0;
    while (std::getline(lines, line)) {
        ++line_no;
        const auto hash = line.find('#');
        if (hash != std::string::npos) line.erase(hash);
        if (trim(line).empty()) continue;
        const auto eq = line.find('=');
        if (eq == std::string::npos) {
            violations.push_back("line " + std::to_string(line_no) +
                                 ": expected 'key = value', got '" + trim(line) + "'");
            continue;
        }
        const std::string key = trim(std::string_view(line).substr(0, eq));
        const std::string value = trim(std::string_view(line).substr(eq + 1));
        if (key.empty()) {
            violations.push_back("line " + std::to_string(line_no) + ": empty key");
            continue;
        }
        if (kv.count(key)) {
            violations.push_back("line " + std::to_string(line_no) + ": duplicate key '" +
                                 key + "'");
            continue;
        }
        kv[key] = value;
    }

    static const std::set<std::string> known = {
        "problem",         "instance",        "tsp_cities",       "tsp_seed",
        "deceptive_a",     "deceptive_b",     "deceptive_delta",  "tournament_sizes",
        "uniform_selection", "deletions",     "capacities",       "initial_size",
        "crossover_prob",  "mutation_prob",   "levels",           "max_generations",
        "stall_generations", "target_fitness", "repetitions",     "seed",
        "diversity_cadence", "top_band_width", "out",             "diversity_out",
        "histogram_out"};
    for (const auto& [key, value] : kv)
        if (!known.count(key)) violations.push_back("unknown key '" + key + "'");

    ExperimentConfig cfg;
    const auto has = [&](const char* k) { return kv.count(k) != 0; };
    const auto get = [&](const char* k) { return kv.at(k); };
    const auto bad = [&](const char* k, const char* expected) {
        violations.push_back(std::string("invalid value for ") + k + ": '" + get(k) +
                             "' (expected " + expected + ")");
    };

    std::optional<ProblemSpec::Kind> kind;
    if (!has("problem")) {
        violations.push_back("missing required key: problem");
    } else {
        const auto& p = get("problem");
        if (p == "deceptive2d") kind = ProblemSpec::Kind::deceptive2d;
        else if (p == "tsp") kind = ProblemSpec::Kind::tsp;
        else if (p == "scp") kind = ProblemSpec::Kind::scp;
        else if (p == "max3sat") kind = ProblemSpec::Kind::max3sat;
        else bad("problem", "deceptive2d, tsp, scp or max3sat");
    }

    // problem sources
    if (has("instance")) cfg.problem.instance_path = get("instance");
    if (has("tsp_cities")) {
        long long v = 0;
        if (!parse_ll(get("tsp_cities"), v) || v < 2) bad("tsp_cities", "an integer >= 2");
        else cfg.problem.tsp_cities = static_cast<std::size_t>(v);
    }
    if (has("tsp_seed")) {
        std::uint64_t v = 0;
        if (!parse_u64(get("tsp_seed"), v)) bad("tsp_seed", "a nonnegative integer");
        else cfg.problem.tsp_seed = v;
    }
    for (const char* k : {"deceptive_a", "deceptive_b", "deceptive_delta"}) {
        if (!has(k)) continue;
        double v = 0.0;
        if (!parse_real(get(k), v)) bad(k, "a real number");
        else if (k[10] == 'a') cfg.problem.deceptive_a = v;
        else if (k[10] == 'b') cfg.problem.deceptive_b = v;
        else cfg.problem.deceptive_delta = v;
    }

    if (kind) {
        cfg.problem.kind = *kind;
        const bool is_deceptive = *kind == ProblemSpec::Kind::deceptive2d;
        const bool is_tsp = *kind == ProblemSpec::Kind::tsp;
        for (const char* k : {"deceptive_a", "deceptive_b", "deceptive_delta"})
            if (has(k) && !is_deceptive)
                violations.push_back(std::string(k) + " requires problem = deceptive2d");
        for (const char* k : {"tsp_cities", "tsp_seed"})
            if (has(k) && !is_tsp)
                violations.push_back(std::string(k) + " requires problem = tsp");
        if (is_deceptive) {
            if (!has("deceptive_delta"))
                violations.push_back("missing required key: deceptive_delta");
            else if (cfg.problem.deceptive_delta > 0.0) {
                const auto& p = cfg.problem;
                if (p.deceptive_a < 0.0 || p.deceptive_a + p.deceptive_delta > 1.0 ||
                    p.deceptive_b < 0.0 || p.deceptive_b + p.deceptive_delta > 1.0)
                    violations.push_back("deceptive strips must lie inside the unit square");
            } else {
                violations.push_back("deceptive_delta must be positive");
            }
            if (has("instance"))
                violations.push_back("instance does not apply to problem = deceptive2d");
        } else if (is_tsp) {
            const bool from_file = has("instance"), generated = has("tsp_cities");
            if (from_file == generated)
                violations.push_back("tsp needs exactly one of: instance, tsp_cities");
        } else if (!has("instance")) {
            violations.push_back(std::string("missing required key: instance (problem = ") +
                                 to_string(*kind) + " loads a file)");
        }
    }

    // scheme grid
    if (has("tournament_sizes")) {
        std::set<long long> seen;
        for (const auto& item : split_list(get("tournament_sizes"))) {
            long long v = 0;
            if (!parse_ll(item, v) || v < 1) {
                violations.push_back("invalid tournament size '" + item +
                                     "' (expected an integer >= 1)");
            } else if (!seen.insert(v).second) {
                violations.push_back("duplicate tournament size " + std::to_string(v));
            } else {
                cfg.selections.push_back(Selection::tournament(static_cast<std::size_t>(v)));
            }
        }
    }
    bool uniform_sel = false;
    if (has("uniform_selection")) {
        const auto& v = get("uniform_selection");
        if (v == "true") uniform_sel = true;
        else if (v != "false") bad("uniform_selection", "true or false");
    }
    if (uniform_sel) cfg.selections.push_back(Selection::uniform());
    if (cfg.selections.empty())
        violations.push_back("no selection scheme: set tournament_sizes and/or uniform_selection");

    if (has("deletions")) {
        cfg.deletions.clear();
        for (const auto& item : split_list(get("deletions"))) {
            Deletion d;
            if (item == "random") d = Deletion::random;
            else if (item == "fuds") d = Deletion::fuds;
            else {
                violations.push_back("invalid deletion scheme '" + item +
                                     "' (expected random or fuds)");
                continue;
            }
            if (std::find(cfg.deletions.begin(), cfg.deletions.end(), d) != cfg.deletions.end())
                violations.push_back("duplicate deletion scheme '" + item + "'");
            else cfg.deletions.push_back(d);
        }
        if (cfg.deletions.empty())
            violations.push_back("deletions must name at least one scheme");
    }

    if (!has("capacities")) {
        violations.push_back("missing required key: capacities");
    } else {
        std::set<long long> seen;
        for (const auto& item : split_list(get("capacities"))) {
            long long v = 0;
            if (!parse_ll(item, v) || v < 1) {
                violations.push_back("invalid capacity '" + item +
                                     "' (expected an integer >= 1)");
            } else if (!seen.insert(v).second) {
                violations.push_back("duplicate capacity " + std::to_string(v));
            } else {
                cfg.capacities.push_back(static_cast<std::size_t>(v));
            }
        }
        if (cfg.capacities.empty()) violations.push_back("capacities must name at least one size");
    }

    if (has("initial_size")) {
        long long v = 0;
        if (!parse_ll(get("initial_size"), v) || v < 1) bad("initial_size", "an integer >= 1");
        else cfg.initial_size = static_cast<std::size_t>(v);
    }
    if (cfg.initial_size)
        for (const auto cap : cfg.capacities)
            if (*cfg.initial_size > cap)
                violations.push_back("initial_size " + std::to_string(*cfg.initial_size) +
                                     " exceeds capacity " + std::to_string(cap));

    for (const char* k : {"crossover_prob", "mutation_prob"}) {
        if (!has(k)) continue;
        double v = 0.0;
        if (!parse_real(get(k), v) || v < 0.0 || v > 1.0) bad(k, "a real in [0, 1]");
        else (k[0] == 'c' ? cfg.crossover_prob : cfg.mutation_prob) = v;
    }

    if (has("levels")) {
        long long v = 0;
        if (!parse_ll(get("levels"), v) || v < 1) bad("levels", "an integer >= 1");
        else cfg.level_count = static_cast<std::size_t>(v);
    }

    for (const char* k : {"max_generations", "stall_generations"}) {
        if (!has(k)) continue;
        double v = 0.0;
        if (!parse_real(get(k), v) || !(v > 0.0)) bad(k, "a positive real");
        else (k[0] == 'm' ? cfg.stop.max_generations : cfg.stop.stall_generations) = v;
    }
    if (has("target_fitness")) {
        double v = 0.0;
        if (!parse_real(get("target_fitness"), v)) bad("target_fitness", "a real number");
        else cfg.stop.target_fitness = v;
    }
    if (!cfg.stop.valid())
        violations.push_back(
            "no stop rule: set max_generations, stall_generations and/or target_fitness");

    if (has("repetitions")) {
        long long v = 0;
        if (!parse_ll(get("repetitions"), v) || v < 1) bad("repetitions", "an integer >= 1");
        else cfg.repetitions = static_cast<std::size_t>(v);
    }
    if (has("seed")) {
        std::uint64_t v = 0;
        if (!parse_u64(get("seed"), v)) bad("seed", "a nonnegative integer");
        else cfg.base_seed = v;
    }
    if (has("diversity_cadence")) {
        std::uint64_t v = 0;
        if (!parse_u64(get("diversity_cadence"), v)) bad("diversity_cadence", "a nonnegative integer");
        else cfg.diversity_cadence = v;
    }
    if (has("top_band_width")) {
        double v = 0.0;
        if (!parse_real(get("top_band_width"), v) || v < 0.0) bad("top_band_width", "a nonnegative real");
        else cfg.top_band_width = v;
    }
    if (has("out")) cfg.out = get("out");
    if (has("diversity_out")) cfg.diversity_out = get("diversity_out");
    if (has("histogram_out")) cfg.histogram_out = get("histogram_out");

    if (!violations.empty()) throw ConfigError(std::move(violations));
    return cfg;
}

} // namespace fuds::bench
