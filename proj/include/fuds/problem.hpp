#pragma once

#include <concepts>
#include <cstdint>
#include <string_view>
#include <vector>

#include "fuds/level_table.hpp"
#include "fuds/rng.hpp"

namespace fuds {

/// Dense bit string genome (one byte per bit, values 0/1).
using BitVector = std::vector<std::uint8_t>;

/// What the steady-state engine needs from a problem definition. Higher
/// fitness is always better; bounds are the problem's a-priori fitness range
/// used to lay out deletion levels.
template <typename P>
concept Problem = std::copy_constructible<P> &&
    requires(const P& p, typename P::genome_type& g, const typename P::genome_type& cg, Rng& rng) {
        typename P::genome_type;
        { p.random_genome(rng) } -> std::same_as<typename P::genome_type>;
        { p.evaluate(cg) } -> std::convertible_to<double>;
        { p.mutate(g, rng) } -> std::same_as<void>;
        { p.crossover(cg, cg, rng) } -> std::same_as<typename P::genome_type>;
        { p.fitness_bounds() } -> std::same_as<FitnessBounds>;
        { p.name() } -> std::convertible_to<std::string_view>;
    };

/// Genomes the diversity metrics can measure (pairwise Hamming distance).
template <typename G>
concept BitGenome = std::same_as<G, BitVector>;

} // namespace fuds
