#pragma once

#include <atomic>
#include <cstddef>
#include <cstdint>
#include <fstream>
#include <sstream>
#include <stdexcept>
#include <string>
#include <thread>
#include <utility>
#include <variant>
#include <vector>

#include "fuds/bench/config.hpp"
#include "fuds/engine.hpp"
#include "fuds/io/dimacs.hpp"
#include "fuds/io/orlib_scp.hpp"
#include "fuds/io/tsp_io.hpp"
#include "fuds/problems/deceptive2d.hpp"
#include "fuds/problems/max3sat.hpp"
#include "fuds/problems/scp.hpp"
#include "fuds/problems/tsp.hpp"

namespace fuds::bench {

/// Instance data could not be read (as opposed to parsed: parse failures
/// surface as io::ParseError with a line number).
class InstanceError : public std::runtime_error {
public:
    using std::runtime_error::runtime_error;
};

using AnyProblem =
    std::variant<problems::Deceptive2D, problems::Tsp, problems::Scp, problems::Max3Sat>;

inline std::string read_file(const std::string& path) {
    std::ifstream in(path, std::ios::binary);
    if (!in) throw InstanceError("cannot read instance file: " + path);
    std::ostringstream ss;
    ss << in.rdbuf();
    return ss.str();
}

inline AnyProblem load_problem(const ProblemSpec& spec) {
    switch (spec.kind) {
    case ProblemSpec::Kind::deceptive2d:
        return problems::Deceptive2D(spec.deceptive_a, spec.deceptive_b, spec.deceptive_delta);
    case ProblemSpec::Kind::tsp:
        if (spec.tsp_cities > 0)
            return problems::Tsp(io::gen_random_tsp(spec.tsp_cities, spec.tsp_seed));
        return problems::Tsp(io::parse_tsp(read_file(spec.instance_path)));
    case ProblemSpec::Kind::scp:
        return problems::Scp(io::parse_orlib_scp(read_file(spec.instance_path)));
    default:
        return problems::Max3Sat(io::parse_dimacs(read_file(spec.instance_path)));
    }
}

/// One grid cell: a scheme at a capacity, with the level count it resolves to.
struct Cell {
    Selection selection;
    Deletion deletion;
    std::size_t capacity = 0;
    std::size_t level_count = 0;

    std::string scheme_name() const {
        return SchemeConfig{selection, deletion}.name();
    }

    /// Unique label used in every output row, e.g. "TOUR3-F-p1000".
    std::string name() const { return scheme_name() + "-p" + std::to_string(capacity); }
};

/// Grid order is selection-major, then deletion, then capacity, matching the
/// config's listing order throughout the output.
inline std::vector<Cell> grid_cells(const ExperimentConfig& cfg) {
    std::vector<Cell> cells;
    cells.reserve(cfg.selections.size() * cfg.deletions.size() * cfg.capacities.size());
    for (const auto& sel : cfg.selections)
        for (const auto del : cfg.deletions)
            for (const auto cap : cfg.capacities)
                cells.push_back(
                    Cell{sel, del, cap, cfg.level_count.value_or(default_level_count(cap))});
    return cells;
}

struct RunRecord {
    std::size_t cell_index = 0;
    std::size_t run_index = 0;
    RunTrace trace;
    double objective = 0.0;
};

struct ExperimentResult {
    ExperimentConfig config;
    std::vector<Cell> cells;
    std::vector<RunRecord> runs; // cell-major, run index minor
};

inline const char* objective_name(ProblemSpec::Kind k) {
    switch (k) {
    case ProblemSpec::Kind::deceptive2d: return "generations";
    case ProblemSpec::Kind::tsp: return "tour_length";
    case ProblemSpec::Kind::scp: return "cover_cost";
    default: return "clauses_satisfied";
    }
}

/// Headline per-run number the aggregate rows summarise: generations to halt
/// for the deceptive problem (time to the target), best tour length or cover
/// cost for tsp and scp, clauses satisfied for max3sat.
inline double objective_of(ProblemSpec::Kind k, const RunTrace& t) {
    switch (k) {
    case ProblemSpec::Kind::deceptive2d: return t.generations();
    case ProblemSpec::Kind::tsp:
    case ProblemSpec::Kind::scp: return 1.0 / t.best_fitness;
    default: return t.best_fitness;
    }
}

/// Run the whole grid. Tasks are independent (each run owns its seed), so
/// `jobs` worker threads share them through a bump counter; results land in
/// slots fixed up front, making the output identical at any thread count.
inline ExperimentResult run_experiment(const ExperimentConfig& cfg, std::size_t jobs = 1) {
    const AnyProblem problem = load_problem(cfg.problem);
    const std::vector<Cell> cells = grid_cells(cfg);
    const std::size_t total = cells.size() * cfg.repetitions;
    std::vector<RunTrace> traces(total);

    const auto run_one = [&](std::size_t task) {
        const std::size_t ci = task / cfg.repetitions;
        const std::size_t ri = task % cfg.repetitions;
        const Cell& cell = cells[ci];
        SchemeConfig scheme{cell.selection, cell.deletion, cfg.crossover_prob,
                            cfg.mutation_prob};
        RunParams params;
        params.capacity = cell.capacity;
        params.initial_size = cfg.initial_size;
        params.level_count = cell.level_count;
        params.stop = cfg.stop;
        params.seed = cfg.base_seed + ri;
        params.diversity_cadence = cfg.diversity_cadence.value_or(
            std::max<std::uint64_t>(1, cell.capacity / 10));
        params.top_band_width = cfg.top_band_width;
        std::visit([&](const auto& p) { traces[task] = run(p, scheme, params).trace; },
                   problem);
    };

    if (jobs <= 1) {
        for (std::size_t t = 0; t < total; ++t) run_one(t);
    } else {
        std::atomic<std::size_t> next{0};
        std::vector<std::thread> workers;
        const std::size_t n_workers = std::min(jobs, total ? total : std::size_t{1});
        workers.reserve(n_workers);
        for (std::size_t w = 0; w < n_workers; ++w)
            workers.emplace_back([&] {
                for (std::size_t t; (t = next.fetch_add(1)) < total;) run_one(t);
            });
        for (auto& w : workers) w.join();
    }

    ExperimentResult result{cfg, cells, {}};
    result.runs.reserve(total);
    for (std::size_t t = 0; t < total; ++t) {
        RunRecord rec;
        rec.cell_index = t / cfg.repetitions;
        rec.run_index = t % cfg.repetitions;
        rec.objective = objective_of(cfg.problem.kind, traces[t]);
        rec.trace = std::move(traces[t]);
        result.runs.push_back(std::move(rec));
    }
    return result;
}

} // namespace fuds::bench
