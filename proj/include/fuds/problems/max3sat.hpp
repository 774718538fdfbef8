#pragma once

#include <array>
#include <cstddef>
#include <cstdint>
#include <memory>
#include <stdexcept>
#include <string_view>
#include <utility>
#include <vector>

#include "fuds/level_table.hpp"
#include "fuds/problem.hpp"
#include "fuds/rng.hpp"

namespace fuds::problems {

/// One CNF clause of up to three literals. Literals use DIMACS convention:
/// +v for variable v, -v for its negation, variables numbered from 1.
struct Clause {
    std::array<std::int32_t, 3> lit{};
    std::uint8_t size = 0;
};

/// CNF formula with clauses of at most three literals.
class CnfInstance {
public:
    CnfInstance(std::size_t variables, const std::vector<std::vector<std::int32_t>>& clauses)
        : n_vars_(variables) {
        if (n_vars_ < 1) throw std::invalid_argument("CnfInstance: need at least one variable");
        clauses_.reserve(clauses.size());
        for (const auto& c : clauses) {
            if (c.empty()) throw std::invalid_argument("CnfInstance: empty clause");
            if (c.size() > 3)
                throw std::invalid_argument("CnfInstance: clause has more than 3 literals");
            Clause out;
            for (const auto l : c) {
                const auto v = static_cast<std::size_t>(l > 0 ? l : -l);
                if (l == 0 || v > n_vars_)
                    throw std::invalid_argument("CnfInstance: literal out of range");
                out.lit[out.size++] = l;
            }
            if (c.size() < 3) short_clauses_ = true;
            clauses_.push_back(out);
        }
    }

    std::size_t variables() const { return n_vars_; }
    std::size_t clause_count() const { return clauses_.size(); }
    const std::vector<Clause>& clauses() const { return clauses_; }

    /// True when any clause has fewer than three literals.
    bool has_short_clauses() const { return short_clauses_; }

    /// Number of clauses the assignment satisfies.
    std::size_t satisfied(const BitVector& assignment) const {
        if (assignment.size() != n_vars_)
            throw std::invalid_argument("CnfInstance: assignment size does not match");
        std::size_t count = 0;
        for (const auto& c : clauses_) {
            for (std::uint8_t i = 0; i < c.size; ++i) {
                const auto l = c.lit[i];
                const bool value = l > 0 ? assignment[static_cast<std::size_t>(l) - 1] != 0
                                         : assignment[static_cast<std::size_t>(-l) - 1] == 0;
                if (value) {
                    ++count;
                    break;
                }
            }
        }
        return count;
    }

private:
    std::size_t n_vars_;
    std::vector<Clause> clauses_;
    bool short_clauses_ = false;
};

/// MAX-3SAT: fitness is the number of satisfied clauses, bounds [0, clauses].
class Max3Sat {
public:
    using genome_type = BitVector;

    explicit Max3Sat(CnfInstance instance)
        : Max3Sat(std::make_shared<const CnfInstance>(std::move(instance))) {}

    explicit Max3Sat(std::shared_ptr<const CnfInstance> instance) : inst_(std::move(instance)) {
        if (inst_->clause_count() < 1)
            throw std::invalid_argument("Max3Sat: need at least one clause");
    }

    const CnfInstance& instance() const { return *inst_; }

    double evaluate(const BitVector& a) const {
        return static_cast<double>(inst_->satisfied(a));
    }

    BitVector random_genome(Rng& rng) const {
        BitVector a(inst_->variables());
        for (auto& b : a) b = chance(rng, 0.5) ? 1 : 0;
        return a;
    }

    /// Flip one uniformly chosen variable.
    void mutate(BitVector& a, Rng& rng) const { a[uniform_index(rng, a.size())] ^= 1; }

    /// Uniform crossover: each variable from a coin flip.
    BitVector crossover(const BitVector& p1, const BitVector& p2, Rng& rng) const {
        BitVector child(p1.size());
        for (std::size_t i = 0; i < child.size(); ++i) child[i] = chance(rng, 0.5) ? p1[i] : p2[i];
        return child;
    }

    FitnessBounds fitness_bounds() const {
        return {0.0, static_cast<double>(inst_->clause_count())};
    }

    std::string_view name() const { return "max3sat"; }

private:
    std::shared_ptr<const CnfInstance> inst_;
};

} // namespace fuds::problems
