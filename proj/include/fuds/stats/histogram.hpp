#pragma once

#include <cstddef>
#include <utility>
#include <vector>

#include "fuds/population.hpp"

namespace fuds::stats {

/// Per-level occupancy snapshot with the fitness range that defines the
/// levels, so the bars can be labelled without the population in hand.
struct LevelHistogram {
    double f_min = 0.0;
    double f_max = 0.0;
    std::vector<std::size_t> counts;

    /// [low, high) span of level i; the last level is closed at f_max.
    std::pair<double, double> level_bounds(std::size_t i) const {
        const double w = (f_max - f_min) / static_cast<double>(counts.size());
        const double lo = f_min + static_cast<double>(i) * w;
        return {lo, i + 1 == counts.size() ? f_max : lo + w};
    }
};

template <typename G>
LevelHistogram population_histogram(const Population<G>& pop) {
    return LevelHistogram{pop.levels().f_min(), pop.levels().f_max(),
                          pop.levels().occupancy_histogram()};
}

} // namespace fuds::stats
