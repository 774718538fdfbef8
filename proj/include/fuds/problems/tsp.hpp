#pragma once

#include <algorithm>
#include <cstddef>
#include <cstdint>
#include <limits>
#include <memory>
#include <numeric>
#include <stdexcept>
#include <string_view>
#include <utility>
#include <vector>

#include "fuds/level_table.hpp"
#include "fuds/rng.hpp"

namespace fuds::problems {

/// Symmetric travelling-salesman instance: a full distance matrix with zero
/// diagonal. Distances are arbitrary nonnegative reals; nothing assumes the
/// triangle inequality.
class TspInstance {
public:
    TspInstance(std::size_t n, std::vector<double> distances)
        : n_(n), d_(std::move(distances)) {
        if (n_ < 2) throw std::invalid_argument("TspInstance: need at least 2 cities");
        if (d_.size() != n_ * n_)
            throw std::invalid_argument("TspInstance: distance matrix has wrong size");
        for (std::size_t i = 0; i < n_; ++i) {
            if (d_[i * n_ + i] != 0.0)
                throw std::invalid_argument("TspInstance: diagonal must be zero");
            for (std::size_t j = i + 1; j < n_; ++j) {
                if (d_[i * n_ + j] < 0.0)
                    throw std::invalid_argument("TspInstance: distances must be nonnegative");
                if (d_[i * n_ + j] != d_[j * n_ + i])
                    throw std::invalid_argument("TspInstance: matrix must be symmetric");
            }
        }
    }

    std::size_t size() const { return n_; }
    double operator()(std::size_t i, std::size_t j) const { return d_[i * n_ + j]; }
    const std::vector<double>& data() const { return d_; }

    /// Sum of the n smallest off-diagonal distances: every tour uses n edges,
    /// so no tour can be shorter. Loose but cheap and always valid.
    double tour_length_lower_bound() const {
        std::vector<double> edges;
        edges.reserve(n_ * (n_ - 1) / 2);
        for (std::size_t i = 0; i < n_; ++i)
            for (std::size_t j = i + 1; j < n_; ++j) edges.push_back(d_[i * n_ + j]);
        std::sort(edges.begin(), edges.end());
        const std::size_t take = std::min(n_, edges.size());
        double sum = 0.0;
        for (std::size_t i = 0; i < take; ++i) sum += edges[i];
        // n = 2 has a single edge, traversed both ways.
        if (take < n_) sum *= static_cast<double>(n_) / static_cast<double>(take);
        return sum;
    }

private:
    std::size_t n_;
    std::vector<double> d_; // row-major n x n
};

/// City visiting order; a permutation of 0..n-1.
using Tour = std::vector<std::uint32_t>;

inline void require_permutation(const Tour& t, const char* who) {
    std::vector<char> seen(t.size(), 0);
    for (const auto c : t) {
        if (c >= t.size() || seen[c])
            throw std::invalid_argument(std::string(who) + ": tour is not a permutation");
        seen[c] = 1;
    }
}

/// Partially mapped crossover with an explicit cut pair, 0 <= cut1 < cut2 <= n.
///
/// The child takes p1's segment [cut1, cut2) verbatim. Every other position
/// starts from p2's city; a city already present in the segment is repeatedly
/// replaced by the p2 city at its p1 position, following the mapping the two
/// segments induce until the chain leaves the segment. The chain terminates
/// because each hop stays inside the segment's city set until it exits, and
/// never revisits a city.
inline Tour pmx_crossover(const Tour& p1, const Tour& p2, std::size_t cut1, std::size_t cut2) {
    const std::size_t n = p1.size();
    if (p2.size() != n) throw std::invalid_argument("pmx_crossover: parents differ in length");
    if (!(cut1 < cut2 && cut2 <= n))
        throw std::invalid_argument("pmx_crossover: cuts must satisfy 0 <= cut1 < cut2 <= n");
    require_permutation(p1, "pmx_crossover");
    require_permutation(p2, "pmx_crossover");

    std::vector<std::uint32_t> pos_in_p1(n);
    for (std::size_t i = 0; i < n; ++i) pos_in_p1[p1[i]] = static_cast<std::uint32_t>(i);

    Tour child(n);
    std::vector<char> in_segment(n, 0);
    for (std::size_t i = cut1; i < cut2; ++i) {
        child[i] = p1[i];
        in_segment[p1[i]] = 1;
    }
    for (std::size_t i = 0; i < n; ++i) {
        if (i >= cut1 && i < cut2) continue;
        std::uint32_t city = p2[i];
        while (in_segment[city]) city = p2[pos_in_p1[city]];
        child[i] = city;
    }
    return child;
}

/// PMX with cuts drawn uniformly over all pairs 0 <= cut1 < cut2 <= n.
inline Tour pmx_crossover(const Tour& p1, const Tour& p2, Rng& rng) {
    const std::size_t n = p1.size();
    // Two draws pick an unordered pair of distinct values in [0, n].
    const std::size_t a = uniform_index(rng, n + 1);
    std::size_t b = uniform_index(rng, n);
    if (b >= a) ++b;
    return pmx_crossover(p1, p2, std::min(a, b), std::max(a, b));
}

/// Swap two distinct positions, uniform over position pairs.
inline void swap_mutation(Tour& t, Rng& rng) {
    const std::size_t n = t.size();
    if (n < 2) return;
    const std::size_t i = uniform_index(rng, n);
    std::size_t j = uniform_index(rng, n - 1);
    if (j >= i) ++j;
    std::swap(t[i], t[j]);
}

/// TSP as a maximisation problem: fitness is the reciprocal tour length.
/// Bounds: 1/n below (unit-box distances keep every tour at most n long)
/// and the reciprocal of the edge-sum lower bound above. An instance with
/// distances above 1 can dip under the lower bound; such fitness is clamped
/// into the level range and counted, not rejected.
class Tsp {
public:
    using genome_type = Tour;

    explicit Tsp(TspInstance instance)
        : Tsp(std::make_shared<const TspInstance>(std::move(instance))) {}

    explicit Tsp(std::shared_ptr<const TspInstance> instance) : inst_(std::move(instance)) {
        const double lo = 1.0 / static_cast<double>(inst_->size());
        const double shortest = std::max(inst_->tour_length_lower_bound(), 1e-12);
        double hi = 1.0 / shortest;
        if (!(lo < hi)) hi = lo + 1.0; // degenerate instance (all edges equal or long)
        bounds_ = {lo, hi};
    }

    const TspInstance& instance() const { return *inst_; }

    double tour_length(const Tour& t) const {
        require_permutation(t, "Tsp::tour_length");
        if (t.size() != inst_->size())
            throw std::invalid_argument("Tsp::tour_length: tour size does not match instance");
        double len = 0.0;
        for (std::size_t i = 0; i + 1 < t.size(); ++i) len += (*inst_)(t[i], t[i + 1]);
        len += (*inst_)(t.back(), t.front());
        return len;
    }

    double evaluate(const Tour& t) const { return 1.0 / tour_length(t); }

    Tour random_genome(Rng& rng) const {
        Tour t(inst_->size());
        std::iota(t.begin(), t.end(), 0);
        std::shuffle(t.begin(), t.end(), rng);
        return t;
    }

    void mutate(Tour& t, Rng& rng) const { swap_mutation(t, rng); }

    Tour crossover(const Tour& p1, const Tour& p2, Rng& rng) const {
        return pmx_crossover(p1, p2, rng);
    }

    FitnessBounds fitness_bounds() const { return bounds_; }

    std::string_view name() const { return "tsp"; }

private:
    std::shared_ptr<const TspInstance> inst_;
    FitnessBounds bounds_;
};

} // namespace fuds::problems
