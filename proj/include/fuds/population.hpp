#pragma once

#include <cstddef>
#include <stdexcept>
#include <utility>
#include <vector>

#include "fuds/level_table.hpp"

namespace fuds {

template <typename G>
struct Individual {
    G genome;
    double fitness;
};

/// Fixed-capacity population with a fitness-level index kept coherent across
/// every mutation of the member set.
///
/// Members live in dense slots 0..size()-1. The steady-state engine only ever
/// grows the population (insert) or swaps one member for another (replace),
/// so slots never vacate and ids stay stable for the lifetime of a run.
template <typename G>
class Population {
public:
    using Id = LevelTable::Id;

    Population(std::size_t capacity, FitnessBounds bounds, std::size_t level_count)
        : capacity_(capacity), table_(bounds, level_count) {
        if (capacity < 1)
            throw std::invalid_argument("Population: capacity must be at least 1");
        members_.reserve(capacity);
    }

    std::size_t size() const { return members_.size(); }
    std::size_t capacity() const { return capacity_; }
    bool at_capacity() const { return members_.size() == capacity_; }

    const LevelTable& levels() const { return table_; }

    const Individual<G>& member(Id id) const { return members_[id]; }

    /// Add a member while below capacity. Returns its id.
    Id insert(G genome, double fitness) {
        if (at_capacity())
            throw std::logic_error("Population::insert: population is full");
        const Id id = static_cast<Id>(members_.size());
        members_.push_back(Individual<G>{std::move(genome), fitness});
        table_.add(id, fitness);
        return id;
    }

    /// Swap the member in slot id for a new individual.
    void replace(Id id, G genome, double fitness) {
        if (id >= members_.size())
            throw std::logic_error("Population::replace: no such member");
        table_.remove(id);
        members_[id] = Individual<G>{std::move(genome), fitness};
        table_.add(id, fitness);
    }

    const std::vector<Individual<G>>& members() const { return members_; }

private:
    std::size_t capacity_;
    std::vector<Individual<G>> members_;
    LevelTable table_;
};

} // namespace fuds
