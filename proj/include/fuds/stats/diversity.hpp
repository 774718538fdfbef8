#pragma once

#include <cstddef>
#include <optional>
#include <stdexcept>
#include <vector>

#include "fuds/population.hpp"
#include "fuds/problem.hpp"

namespace fuds::stats {

/// Mean pairwise Hamming distance over a set of equal-length bit vectors,
/// absent when fewer than two are given.
///
/// Computed per position: a column with k ones among n vectors contributes
/// k*(n-k) differing pairs, so the total over columns divided by n(n-1)/2 is
/// the pairwise mean. Linear in total bits where the direct pair loop is
/// quadratic in n.
inline std::optional<double> avg_pairwise_hamming(const std::vector<const BitVector*>& genomes) {
    const std::size_t n = genomes.size();
    if (n < 2) return std::nullopt;
    const std::size_t len = genomes[0]->size();
    for (const auto* g : genomes)
        if (g->size() != len)
            throw std::invalid_argument("avg_pairwise_hamming: genomes differ in length");
    double differing_pairs = 0.0;
    for (std::size_t p = 0; p < len; ++p) {
        std::size_t ones = 0;
        for (const auto* g : genomes) ones += (*g)[p];
        differing_pairs +=
            static_cast<double>(ones) * static_cast<double>(n - ones);
    }
    const double pairs = static_cast<double>(n) * static_cast<double>(n - 1) / 2.0;
    return differing_pairs / pairs;
}

inline std::optional<double> avg_pairwise_hamming(const std::vector<BitVector>& genomes) {
    std::vector<const BitVector*> ptrs;
    ptrs.reserve(genomes.size());
    for (const auto& g : genomes) ptrs.push_back(&g);
    return avg_pairwise_hamming(ptrs);
}

/// Mean pairwise Hamming distance among members whose fitness is within
/// band_width of the population's fittest member; absent when fewer than two
/// qualify.
template <typename G>
    requires BitGenome<G>
std::optional<double> top_band_diversity(const Population<G>& pop, double band_width) {
    if (pop.size() == 0) return std::nullopt;
    double best = pop.members()[0].fitness;
    for (const auto& m : pop.members())
        if (m.fitness > best) best = m.fitness;
    std::vector<const BitVector*> in_band;
    for (const auto& m : pop.members())
        if (m.fitness >= best - band_width) in_band.push_back(&m.genome);
    return avg_pairwise_hamming(in_band);
}

/// Mean pairwise Hamming distance over the whole population.
template <typename G>
    requires BitGenome<G>
std::optional<double> population_diversity(const Population<G>& pop) {
    std::vector<const BitVector*> all;
    all.reserve(pop.size());
    for (const auto& m : pop.members()) all.push_back(&m.genome);
    return avg_pairwise_hamming(all);
}

} // namespace fuds::stats
