#pragma once

#include <cstddef>
#include <cstdint>
#include <optional>
#include <string>
#include <vector>

#include "fuds/schemes.hpp"

namespace fuds {

/// Best-ever fitness immediately after `cycle`. Traces store change-points
/// only, so consecutive points are strictly increasing in fitness.
struct BestPoint {
    std::uint64_t cycle;
    double fitness;
};

/// Periodic population snapshot (bit-genome problems only). best_fitness is
/// the fittest member at sampling time; top_band is absent when fewer than
/// two members sit within the band.
struct DiversitySample {
    std::uint64_t cycle;
    double best_fitness;
    double total;
    std::optional<double> top_band;
};

/// Everything one run leaves behind: enough to reproduce it (config echo and
/// seed) and enough to analyse it without the population in hand.
struct RunTrace {
    // configuration echo
    std::string problem;
    std::string scheme; // e.g. "TOUR2-F"
    std::size_t capacity = 0;
    std::size_t initial_size = 0;
    std::size_t level_count = 0;
    double crossover_prob = 0.0;
    double mutation_prob = 0.0;
    StopRule stop;
    std::uint64_t seed = 0;
    std::uint64_t diversity_cadence = 0; // cycles between samples; 0 = sampling off
    double top_band_width = 0.0;
    double f_min = 0.0;
    double f_max = 0.0;

    // outcome
    std::vector<BestPoint> best_points; // change-points, strictly increasing fitness
    std::vector<DiversitySample> diversity;
    std::vector<std::size_t> final_histogram; // per-level occupancy at halt
    std::uint64_t clamp_count = 0;
    std::uint64_t cycles = 0;
    double best_fitness = 0.0;
    StopReason stop_reason = StopReason::max_generations;

    double generations() const {
        return static_cast<double>(cycles) / static_cast<double>(capacity);
    }
};

} // namespace fuds
