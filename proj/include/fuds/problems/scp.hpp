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
#include "fuds/problem.hpp"
#include "fuds/rng.hpp"

namespace fuds::problems {

/// Weighted set covering instance: m rows to cover, n columns with positive
/// costs, each row covered by at least one column.
class ScpInstance {
public:
    ScpInstance(std::size_t rows, std::size_t cols,
                std::vector<std::vector<std::uint32_t>> row_columns, std::vector<double> costs)
        : m_(rows), n_(cols), row_cols_(std::move(row_columns)), cost_(std::move(costs)) {
        if (m_ < 1 || n_ < 1)
            throw std::invalid_argument("ScpInstance: need at least one row and one column");
        if (row_cols_.size() != m_)
            throw std::invalid_argument("ScpInstance: row list count does not match row count");
        if (cost_.size() != n_)
            throw std::invalid_argument("ScpInstance: cost count does not match column count");
        for (const double c : cost_)
            if (!(c > 0.0)) throw std::invalid_argument("ScpInstance: costs must be positive");
        col_rows_.resize(n_);
        for (std::size_t r = 0; r < m_; ++r) {
            if (row_cols_[r].empty())
                throw std::invalid_argument("ScpInstance: a row has no covering column");
            for (const auto c : row_cols_[r]) {
                if (c >= n_)
                    throw std::invalid_argument("ScpInstance: column index out of range");
                col_rows_[c].push_back(static_cast<std::uint32_t>(r));
            }
        }
    }

    std::size_t rows() const { return m_; }
    std::size_t cols() const { return n_; }
    double cost(std::size_t j) const { return cost_[j]; }
    const std::vector<std::uint32_t>& row_columns(std::size_t r) const { return row_cols_[r]; }
    const std::vector<std::uint32_t>& column_rows(std::size_t j) const { return col_rows_[j]; }

    double total_cost() const { return std::accumulate(cost_.begin(), cost_.end(), 0.0); }
    double min_cost() const { return *std::min_element(cost_.begin(), cost_.end()); }

private:
    std::size_t m_, n_;
    std::vector<std::vector<std::uint32_t>> row_cols_;
    std::vector<double> cost_;
    std::vector<std::vector<std::uint32_t>> col_rows_;
};

/// Make a column selection feasible and trim it, greedily.
///
/// Phase 1 adds, while any row is uncovered, the column with the lowest cost
/// per newly covered row (lowest index on ties). Phase 2 walks the selected
/// columns in order of decreasing cost (higher index first on equal cost) and
/// drops any column every row of which is covered at least twice. The result
/// covers every row and contains no removable column.
inline BitVector scp_repair(BitVector x, const ScpInstance& inst) {
    if (x.size() != inst.cols())
        throw std::invalid_argument("scp_repair: selection size does not match column count");

    std::vector<std::uint32_t> cover(inst.rows(), 0);
    for (std::size_t j = 0; j < inst.cols(); ++j)
        if (x[j])
            for (const auto r : inst.column_rows(j)) ++cover[r];
    std::size_t uncovered = 0;
    for (const auto c : cover) uncovered += (c == 0);

    while (uncovered > 0) {
        std::size_t best = inst.cols();
        double best_ratio = std::numeric_limits<double>::infinity();
        for (std::size_t j = 0; j < inst.cols(); ++j) {
            if (x[j]) continue;
            std::size_t newly = 0;
            for (const auto r : inst.column_rows(j)) newly += (cover[r] == 0);
            if (newly == 0) continue;
            const double ratio = inst.cost(j) / static_cast<double>(newly);
            if (ratio < best_ratio) { // strict: first of equals wins
                best_ratio = ratio;
                best = j;
            }
        }
        if (best == inst.cols())
            throw std::logic_error("scp_repair: uncoverable row"); // instance invariant broken
        x[best] = 1;
        for (const auto r : inst.column_rows(best))
            if (cover[r]++ == 0) --uncovered;
    }

    std::vector<std::uint32_t> selected;
    for (std::size_t j = 0; j < inst.cols(); ++j)
        if (x[j]) selected.push_back(static_cast<std::uint32_t>(j));
    std::sort(selected.begin(), selected.end(), [&](std::uint32_t a, std::uint32_t b) {
        if (inst.cost(a) != inst.cost(b)) return inst.cost(a) > inst.cost(b);
        return a > b;
    });
    for (const auto j : selected) {
        bool redundant = true;
        for (const auto r : inst.column_rows(j))
            if (cover[r] < 2) {
                redundant = false;
                break;
            }
        if (redundant) {
            x[j] = 0;
            for (const auto r : inst.column_rows(j)) --cover[r];
        }
    }
    return x;
}

/// Set covering as a maximisation problem: fitness is the reciprocal cost of
/// a feasible cover. Variation operators repair their output, so the engine
/// only ever evaluates feasible selections; evaluate enforces that contract.
class Scp {
public:
    using genome_type = BitVector;

    explicit Scp(ScpInstance instance)
        : Scp(std::make_shared<const ScpInstance>(std::move(instance))) {}

    explicit Scp(std::shared_ptr<const ScpInstance> instance) : inst_(std::move(instance)) {}

    const ScpInstance& instance() const { return *inst_; }

    double cover_cost(const BitVector& x) const {
        if (x.size() != inst_->cols())
            throw std::invalid_argument("Scp: selection size does not match column count");
        double cost = 0.0;
        for (std::size_t j = 0; j < inst_->cols(); ++j)
            if (x[j]) cost += inst_->cost(j);
        return cost;
    }

    bool feasible(const BitVector& x) const {
        for (std::size_t r = 0; r < inst_->rows(); ++r) {
            bool covered = false;
            for (const auto j : inst_->row_columns(r))
                if (x[j]) {
                    covered = true;
                    break;
                }
            if (!covered) return false;
        }
        return true;
    }

    double evaluate(const BitVector& x) const {
        if (!feasible(x))
            throw std::invalid_argument("Scp::evaluate: selection does not cover all rows");
        return 1.0 / cover_cost(x);
    }

    BitVector random_genome(Rng& rng) const {
        BitVector x(inst_->cols());
        for (auto& b : x) b = chance(rng, 0.5) ? 1 : 0;
        return scp_repair(std::move(x), *inst_);
    }

    /// Flip one uniformly chosen column, then repair.
    void mutate(BitVector& x, Rng& rng) const {
        const std::size_t j = uniform_index(rng, x.size());
        x[j] ^= 1;
        x = scp_repair(std::move(x), *inst_);
    }

    /// Uniform crossover (each column from a coin flip), then repair.
    BitVector crossover(const BitVector& p1, const BitVector& p2, Rng& rng) const {
        BitVector child(p1.size());
        for (std::size_t j = 0; j < child.size(); ++j) child[j] = chance(rng, 0.5) ? p1[j] : p2[j];
        return scp_repair(std::move(child), *inst_);
    }

    FitnessBounds fitness_bounds() const {
        return {1.0 / inst_->total_cost(), 1.0 / inst_->min_cost()};
    }

    std::string_view name() const { return "scp"; }

private:
    std::shared_ptr<const ScpInstance> inst_;
};

} // namespace fuds::problems
