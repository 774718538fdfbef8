#pragma once

#include <algorithm>
#include <cstddef>
#include <map>
#include <optional>
#include <span>
#include <stdexcept>
#include <vector>

#include "fuds/run_trace.hpp"

namespace fuds::stats {

/// Mean diversity across runs at one best-fitness checkpoint. n_total and
/// n_top_band count the runs contributing to each mean; mean_top_band is
/// absent when no contributing run had a top-band value there.
struct CurvePoint {
    double best_fitness = 0.0;
    double mean_total = 0.0;
    std::size_t n_total = 0;
    std::optional<double> mean_top_band;
    std::size_t n_top_band = 0;
};

/// Diversity as a function of best fitness, averaged across runs.
///
/// Each run's samples are grouped by the best fitness they were taken at; a
/// run dwelling at one fitness for several samples contributes its average
/// there, so long plateaus are not over-weighted. Checkpoints are the union
/// of observed values, truncated to those reached by strictly more than half
/// the runs (a run reaches v when its final best fitness is at least v), so
/// the curve never extends past what the median run achieved.
inline std::vector<CurvePoint> diversity_vs_best_curve(std::span<const RunTrace> traces) {
    if (traces.empty())
        throw std::invalid_argument("diversity_vs_best_curve: need at least one trace");

    struct Acc {
        double total_sum = 0.0;
        std::size_t total_n = 0;
        double top_sum = 0.0;
        std::size_t top_n = 0;
    };
    std::vector<std::map<double, Acc>> per_run(traces.size());
    for (std::size_t r = 0; r < traces.size(); ++r)
        for (const auto& s : traces[r].diversity) {
            auto& acc = per_run[r][s.best_fitness];
            acc.total_sum += s.total;
            ++acc.total_n;
            if (s.top_band) {
                acc.top_sum += *s.top_band;
                ++acc.top_n;
            }
        }

    std::vector<double> finals;
    finals.reserve(traces.size());
    for (const auto& t : traces) finals.push_back(t.best_fitness);
    std::sort(finals.begin(), finals.end(), std::greater<>());
    const double cutoff = finals[finals.size() / 2];

    std::map<double, CurvePoint> curve;
    for (const auto& run : per_run)
        for (const auto& [v, acc] : run) {
            if (v > cutoff) continue;
            auto& pt = curve[v];
            pt.best_fitness = v;
            pt.mean_total += acc.total_sum / static_cast<double>(acc.total_n);
            ++pt.n_total;
            if (acc.top_n > 0) {
                pt.mean_top_band = pt.mean_top_band.value_or(0.0) +
                                   acc.top_sum / static_cast<double>(acc.top_n);
                ++pt.n_top_band;
            }
        }

    std::vector<CurvePoint> out;
    out.reserve(curve.size());
    for (auto& [v, pt] : curve) {
        pt.mean_total /= static_cast<double>(pt.n_total);
        if (pt.mean_top_band) *pt.mean_top_band /= static_cast<double>(pt.n_top_band);
        out.push_back(pt);
    }
    return out;
}

} // namespace fuds::stats
