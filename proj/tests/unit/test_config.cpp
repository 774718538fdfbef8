#include <catch2/catch_amalgamated.hpp>

#include <string>
#include <vector>

#include "fuds/bench/config.hpp"

using fuds::bench::ConfigError;
using fuds::bench::ExperimentConfig;
using fuds::bench::parse_config;
using fuds::bench::ProblemSpec;
using fuds::Deletion;

namespace {

std::vector<std::string> violations_of(const std::string& text) {
    try {
        parse_config(text);
    } catch (const ConfigError& e) {
        return e.violations();
    }
    FAIL("expected ConfigError");
    return {};
}

bool mentions(const std::vector<std::string>& vs, const std::string& needle) {
    for (const auto& v : vs)
        if (v.find(needle) != std::string::npos) return true;
    return false;
}

} // namespace

TEST_CASE("a full config parses with every key honoured", "[config]") {
    const ExperimentConfig cfg = parse_config(
        "# tsp tournament sweep\n"
        "problem = tsp\n"
        "tsp_cities = 20\n"
        "tsp_seed = 424242\n"
        "tournament_sizes = 3, 4, 12\n"
        "uniform_selection = true\n"
        "deletions = fuds, random\n"
        "capacities = 100, 250   # population sizes\n"
        "initial_size = 10\n"
        "crossover_prob = 0.25\n"
        "mutation_prob = 0.75\n"
        "levels = 16\n"
        "max_generations = 100\n"
        "stall_generations = 40\n"
        "target_fitness = 0.9\n"
        "repetitions = 20\n"
        "seed = 7\n"
        "diversity_cadence = 25\n"
        "top_band_width = 2.5\n"
        "out = runs.csv\n"
        "diversity_out = div.csv\n"
        "histogram_out = hist.csv\n");

    CHECK(cfg.problem.kind == ProblemSpec::Kind::tsp);
    CHECK(cfg.problem.tsp_cities == 20);
    CHECK(cfg.problem.tsp_seed == 424242);
    REQUIRE(cfg.selections.size() == 4);
    CHECK(cfg.selections[0].name() == "TOUR3");
    CHECK(cfg.selections[1].name() == "TOUR4");
    CHECK(cfg.selections[2].name() == "TOUR12");
    CHECK(cfg.selections[3].name() == "RAND");
    CHECK(cfg.deletions == std::vector<Deletion>{Deletion::fuds, Deletion::random});
    CHECK(cfg.capacities == std::vector<std::size_t>{100, 250});
    CHECK(cfg.initial_size.value() == 10);
    CHECK(cfg.crossover_prob == 0.25);
    CHECK(cfg.mutation_prob == 0.75);
    CHECK(cfg.level_count.value() == 16);
    CHECK(cfg.stop.max_generations.value() == 100.0);
    CHECK(cfg.stop.stall_generations.value() == 40.0);
    CHECK(cfg.stop.target_fitness.value() == 0.9);
    CHECK(cfg.repetitions == 20);
    CHECK(cfg.base_seed == 7);
    CHECK(cfg.diversity_cadence.value() == 25);
    CHECK(cfg.top_band_width == 2.5);
    CHECK(cfg.out == "runs.csv");
    CHECK(cfg.diversity_out == "div.csv");
    CHECK(cfg.histogram_out == "hist.csv");
}

TEST_CASE("a minimal config fills in the documented defaults", "[config]") {
    const ExperimentConfig cfg = parse_config(
        "problem = deceptive2d\n"
        "deceptive_delta = 0.1\n"
        "tournament_sizes = 2\n"
        "capacities = 500\n"
        "max_generations = 50\n");

    CHECK(cfg.problem.deceptive_a == 0.2);
    CHECK(cfg.problem.deceptive_b == 0.3);
    CHECK(cfg.problem.deceptive_delta == 0.1);
    CHECK(cfg.deletions == std::vector<Deletion>{Deletion::random, Deletion::fuds});
    CHECK_FALSE(cfg.initial_size.has_value());
    CHECK(cfg.crossover_prob == 0.5);
    CHECK(cfg.mutation_prob == 0.5);
    CHECK_FALSE(cfg.level_count.has_value());
    CHECK_FALSE(cfg.stop.stall_generations.has_value());
    CHECK_FALSE(cfg.stop.target_fitness.has_value());
    CHECK(cfg.repetitions == 1);
    CHECK(cfg.base_seed == 1);
    CHECK_FALSE(cfg.diversity_cadence.has_value());
    CHECK(cfg.top_band_width == 20.0);
    CHECK(cfg.out == "results.csv");
    CHECK(cfg.diversity_out.empty());
    CHECK(cfg.histogram_out.empty());
}

TEST_CASE("every violation is reported in one error", "[config]") {
    const auto vs = violations_of(
        "problem = nope\n"
        "capacities = 0, 5, 5\n"
        "tournament_sizes = 0\n"
        "crossover_prob = 1.5\n"
        "bogus = 1\n"
        "no_equals_line\n");
    CHECK(vs.size() == 9);
    CHECK(mentions(vs, "line 6: expected 'key = value', got 'no_equals_line'"));
    CHECK(mentions(vs, "unknown key 'bogus'"));
    CHECK(mentions(vs, "invalid value for problem: 'nope'"));
    CHECK(mentions(vs, "invalid capacity '0'"));
    CHECK(mentions(vs, "duplicate capacity 5"));
    CHECK(mentions(vs, "invalid tournament size '0'"));
    CHECK(mentions(vs, "no selection scheme"));
    CHECK(mentions(vs, "invalid value for crossover_prob: '1.5'"));
    CHECK(mentions(vs, "no stop rule"));
    // what() joins them all
    try {
        parse_config("problem = nope\n");
        FAIL("expected ConfigError");
    } catch (const ConfigError& e) {
        CHECK_THAT(e.what(), Catch::Matchers::StartsWith("invalid configuration:"));
        CHECK_THAT(e.what(), Catch::Matchers::ContainsSubstring("invalid value for problem"));
    }
}

TEST_CASE("duplicate keys are rejected, first value wins elsewhere", "[config]") {
    const auto vs = violations_of(
        "problem = deceptive2d\n"
        "deceptive_delta = 0.1\n"
        "deceptive_delta = 0.2\n"
        "tournament_sizes = 2\n"
        "capacities = 10\n"
        "max_generations = 5\n");
    REQUIRE(vs.size() == 1);
    CHECK(vs[0] == "line 3: duplicate key 'deceptive_delta'");
}

TEST_CASE("problem-specific keys are fenced to their problem", "[config]") {
    CHECK(mentions(violations_of("problem = tsp\n"
                                 "tsp_cities = 10\n"
                                 "deceptive_a = 0.5\n"
                                 "tournament_sizes = 2\n"
                                 "capacities = 10\n"
                                 "max_generations = 5\n"),
                   "deceptive_a requires problem = deceptive2d"));
    CHECK(mentions(violations_of("problem = deceptive2d\n"
                                 "deceptive_delta = 0.1\n"
                                 "tsp_seed = 3\n"
                                 "tournament_sizes = 2\n"
                                 "capacities = 10\n"
                                 "max_generations = 5\n"),
                   "tsp_seed requires problem = tsp"));
    CHECK(mentions(violations_of("problem = deceptive2d\n"
                                 "deceptive_delta = 0.1\n"
                                 "instance = foo.txt\n"
                                 "tournament_sizes = 2\n"
                                 "capacities = 10\n"
                                 "max_generations = 5\n"),
                   "instance does not apply to problem = deceptive2d"));
}

TEST_CASE("each problem insists on its data source", "[config]") {
    CHECK(mentions(violations_of("problem = tsp\n"
                                 "tournament_sizes = 2\n"
                                 "capacities = 10\n"
                                 "max_generations = 5\n"),
                   "tsp needs exactly one of: instance, tsp_cities"));
    CHECK(mentions(violations_of("problem = tsp\n"
                                 "instance = a.tsp\n"
                                 "tsp_cities = 10\n"
                                 "tournament_sizes = 2\n"
                                 "capacities = 10\n"
                                 "max_generations = 5\n"),
                   "tsp needs exactly one of: instance, tsp_cities"));
    CHECK(mentions(violations_of("problem = scp\n"
                                 "tournament_sizes = 2\n"
                                 "capacities = 10\n"
                                 "max_generations = 5\n"),
                   "missing required key: instance (problem = scp loads a file)"));
    CHECK(mentions(violations_of("problem = max3sat\n"
                                 "tournament_sizes = 2\n"
                                 "capacities = 10\n"
                                 "max_generations = 5\n"),
                   "missing required key: instance (problem = max3sat loads a file)"));
    CHECK(mentions(violations_of("problem = deceptive2d\n"
                                 "tournament_sizes = 2\n"
                                 "capacities = 10\n"
                                 "max_generations = 5\n"),
                   "missing required key: deceptive_delta"));
}

TEST_CASE("deceptive strip geometry is validated", "[config]") {
    CHECK(mentions(violations_of("problem = deceptive2d\n"
                                 "deceptive_delta = 0\n"
                                 "tournament_sizes = 2\n"
                                 "capacities = 10\n"
                                 "max_generations = 5\n"),
                   "deceptive_delta must be positive"));
    CHECK(mentions(violations_of("problem = deceptive2d\n"
                                 "deceptive_a = 0.95\n"
                                 "deceptive_delta = 0.1\n"
                                 "tournament_sizes = 2\n"
                                 "capacities = 10\n"
                                 "max_generations = 5\n"),
                   "deceptive strips must lie inside the unit square"));
}

TEST_CASE("scheme grid entries are validated", "[config]") {
    const std::string base =
        "problem = deceptive2d\n"
        "deceptive_delta = 0.1\n"
        "capacities = 10\n"
        "max_generations = 5\n";
    CHECK(mentions(violations_of(base + "tournament_sizes = 2, 2\n"),
                   "duplicate tournament size 2"));
    CHECK(mentions(violations_of(base + "uniform_selection = maybe\n"),
                   "invalid value for uniform_selection"));
    CHECK(mentions(violations_of(base + "uniform_selection = false\n"), "no selection scheme"));
    CHECK(mentions(violations_of(base + "tournament_sizes = 2\ndeletions = fuds, fuds\n"),
                   "duplicate deletion scheme 'fuds'"));
    CHECK(mentions(violations_of(base + "tournament_sizes = 2\ndeletions = worst\n"),
                   "invalid deletion scheme 'worst'"));

    const ExperimentConfig one = parse_config(base + "tournament_sizes = 2\ndeletions = fuds\n");
    CHECK(one.deletions == std::vector<Deletion>{Deletion::fuds});
}

TEST_CASE("run parameters are validated", "[config]") {
    const std::string base =
        "problem = deceptive2d\n"
        "deceptive_delta = 0.1\n"
        "tournament_sizes = 2\n";
    CHECK(mentions(violations_of(base + "capacities = 10, 20\ninitial_size = 15\n"
                                        "max_generations = 5\n"),
                   "initial_size 15 exceeds capacity 10"));
    CHECK(mentions(violations_of(base + "capacities = 10\nlevels = 0\nmax_generations = 5\n"),
                   "invalid value for levels"));
    CHECK(mentions(violations_of(base + "capacities = 10\nmax_generations = -1\n"),
                   "invalid value for max_generations"));
    CHECK(mentions(violations_of(base + "capacities = 10\nstall_generations = 0\n"),
                   "invalid value for stall_generations"));
    CHECK(mentions(violations_of(base + "capacities = 10\nmax_generations = 5\nseed = -3\n"),
                   "invalid value for seed"));
    CHECK(mentions(violations_of(base + "capacities = 10\nmax_generations = 5\n"
                                        "mutation_prob = nope\n"),
                   "invalid value for mutation_prob"));
    CHECK(mentions(violations_of(base + "capacities = 10\nmax_generations = 5\n"
                                        "top_band_width = -2\n"),
                   "invalid value for top_band_width"));
    CHECK(mentions(violations_of(base + "capacities = 10\n"), "no stop rule"));
}

TEST_CASE("a target-only stop rule is enough", "[config]") {
    const ExperimentConfig cfg = parse_config(
        "problem = deceptive2d\n"
        "deceptive_delta = 0.1\n"
        "tournament_sizes = 2\n"
        "capacities = 10\n"
        "target_fitness = 4\n");
    CHECK(cfg.stop.target_fitness.value() == 4.0);
    CHECK_FALSE(cfg.stop.max_generations.has_value());
}
