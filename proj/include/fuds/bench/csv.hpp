#pragma once

#include <charconv>
#include <cstddef>
#include <ostream>
#include <span>
#include <string>
#include <vector>

#include "fuds/bench/experiment.hpp"
#include "fuds/stats/aggregate.hpp"
#include "fuds/stats/curve.hpp"
#include "fuds/stats/histogram.hpp"

namespace fuds::bench {

/// Shortest decimal form that parses back to the same double; locale-free.
inline std::string csv_double(double v) {
    char buf[64];
    const auto res = std::to_chars(buf, buf + sizeof(buf), v);
    return std::string(buf, res.ptr);
}

/// Per-run rows (`row=run`) followed, per cell, by one aggregate row
/// (`row=agg`) over the objective column. Cells appear in grid order; the
/// spread columns are empty when a cell has a single run. Lines end in LF.
inline void write_results_csv(const ExperimentResult& r, std::ostream& os) {
    os << "row,cell,problem,selection,deletion,capacity,levels,run,seed,best_fitness,"
          "objective,cycles,generations,stop_reason,oob_clamps,n,mean,stddev,stderr,ci95\n";
    const auto kind = r.config.problem.kind;
    for (std::size_t ci = 0; ci < r.cells.size(); ++ci) {
        const Cell& cell = r.cells[ci];
        const std::string prefix = cell.name() + "," + to_string(kind) + "," +
                                   cell.selection.name() + "," +
                                   (cell.deletion == Deletion::fuds ? "fuds" : "random") + "," +
                                   std::to_string(cell.capacity) + "," +
                                   std::to_string(cell.level_count);
        std::vector<double> objectives;
        for (const auto& rec : r.runs) {
            if (rec.cell_index != ci) continue;
            objectives.push_back(rec.objective);
            os << "run," << prefix << ',' << rec.run_index << ',' << rec.trace.seed << ','
               << csv_double(rec.trace.best_fitness) << ',' << csv_double(rec.objective) << ','
               << rec.trace.cycles << ',' << csv_double(rec.trace.generations()) << ','
               << to_string(rec.trace.stop_reason) << ',' << rec.trace.clamp_count
               << ",,,,,\n";
        }
        os << "agg," << prefix << ",,,,,,,,," << objectives.size() << ',';
        if (objectives.size() >= 2) {
            const auto agg = stats::aggregate(objectives);
            os << csv_double(agg.mean) << ',' << csv_double(agg.stddev) << ','
               << csv_double(agg.std_error) << ',' << csv_double(agg.ci95) << '\n';
        } else {
            os << csv_double(objectives.empty() ? 0.0 : objectives[0]) << ",,,\n";
        }
    }
}

/// Diversity-versus-best-fitness curve per cell, averaged across the cell's
/// runs and truncated at the fitness reached by more than half of them.
/// Cells whose runs carry no diversity samples contribute no rows.
inline void write_diversity_csv(const ExperimentResult& r, std::ostream& os) {
    os << "cell,best_fitness,n_runs,mean_total,n_top_band,mean_top_band\n";
    for (std::size_t ci = 0; ci < r.cells.size(); ++ci) {
        std::vector<RunTrace> traces;
        for (const auto& rec : r.runs)
            if (rec.cell_index == ci) traces.push_back(rec.trace);
        bool any = false;
        for (const auto& t : traces) any = any || !t.diversity.empty();
        if (!any) continue;
        const auto curve = stats::diversity_vs_best_curve(traces);
        const std::string cell = r.cells[ci].name();
        for (const auto& pt : curve) {
            os << cell << ',' << csv_double(pt.best_fitness) << ',' << pt.n_total << ','
               << csv_double(pt.mean_total) << ',' << pt.n_top_band << ',';
            if (pt.mean_top_band) os << csv_double(*pt.mean_top_band);
            os << '\n';
        }
    }
}

/// Final per-level occupancy of every run, one row per level.
inline void write_histogram_csv(const ExperimentResult& r, std::ostream& os) {
    os << "cell,run,level,f_low,f_high,count\n";
    for (const auto& rec : r.runs) {
        const auto& t = rec.trace;
        const std::string cell = r.cells[rec.cell_index].name();
        stats::LevelHistogram h{t.f_min, t.f_max, t.final_histogram};
        for (std::size_t i = 0; i < h.counts.size(); ++i) {
            const auto [lo, hi] = h.level_bounds(i);
            os << cell << ',' << rec.run_index << ',' << i << ',' << csv_double(lo) << ','
               << csv_double(hi) << ',' << h.counts[i] << '\n';
        }
    }
}

} // namespace fuds::bench
