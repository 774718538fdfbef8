#pragma once

#include <cmath>
#include <cstddef>
#include <cstdint>
#include <limits>
#include <stdexcept>
#include <utility>
#include <vector>

namespace fuds {

/// Closed fitness range [min, max] a population partitions into levels.
struct FitnessBounds {
    double min;
    double max;
};

/// Partition of a fitness range into equal-width levels, with per-level
/// member lists kept in sync as individuals come and go.
///
/// Level i covers [min + i*w, min + (i+1)*w) for width w = (max-min)/L,
/// except the last level, which is closed at max. Fitness outside the range
/// is clamped to the nearest end level and counted, not rejected: bounds are
/// part of the problem definition and a value beyond them signals a loose
/// bound, not an invalid individual.
class LevelTable {
public:
    using Id = std::uint32_t;

    static constexpr std::size_t npos = std::numeric_limits<std::size_t>::max();

    LevelTable(FitnessBounds bounds, std::size_t level_count)
        : f_min_(bounds.min), f_max_(bounds.max) {
        if (!(f_min_ < f_max_))
            throw std::invalid_argument("LevelTable: fitness bounds must satisfy min < max");
        if (level_count < 1)
            throw std::invalid_argument("LevelTable: level count must be at least 1");
        levels_.resize(level_count);
    }

    std::size_t level_count() const { return levels_.size(); }
    double f_min() const { return f_min_; }
    double f_max() const { return f_max_; }
    std::size_t size() const { return size_; }

    /// Number of insertions whose fitness fell outside [f_min, f_max].
    std::uint64_t clamp_count() const { return clamp_count_; }

    /// Level holding fitness f. Out-of-range f maps to the nearest end level;
    /// f == f_max maps to the last level (its interval is closed above).
    std::size_t level_index(double f) const {
        const std::size_t n = levels_.size();
        if (f <= f_min_) return 0;
        if (f >= f_max_) return n - 1;
        const double scaled = (f - f_min_) * static_cast<double>(n) / (f_max_ - f_min_);
        const auto idx = static_cast<std::size_t>(scaled);
        return idx < n ? idx : n - 1; // guards rounding at the upper edge
    }

    /// [low, high) span of level i; the last level is closed at high.
    std::pair<double, double> level_bounds(std::size_t i) const {
        const double w = (f_max_ - f_min_) / static_cast<double>(levels_.size());
        const double lo = f_min_ + static_cast<double>(i) * w;
        return {lo, i + 1 == levels_.size() ? f_max_ : lo + w};
    }

    void add(Id id, double fitness) {
        if (fitness < f_min_ || fitness > f_max_) ++clamp_count_;
        const auto lvl = level_index(fitness);
        if (id >= where_.size()) where_.resize(id + 1, Slot{npos, 0});
        if (where_[id].level != npos)
            throw std::logic_error("LevelTable::add: id already present");
        where_[id] = Slot{lvl, levels_[lvl].size()};
        levels_[lvl].push_back(id);
        ++size_;
    }

    void remove(Id id) {
        if (id >= where_.size() || where_[id].level == npos)
            throw std::logic_error("LevelTable::remove: id not present");
        const Slot slot = where_[id];
        auto& bucket = levels_[slot.level];
        const Id moved = bucket.back();
        bucket[slot.pos] = moved;
        bucket.pop_back();
        where_[moved].pos = slot.pos; // no-op when id was last
        where_[id] = Slot{npos, 0};
        --size_;
    }

    std::size_t occupancy(std::size_t level) const { return levels_.at(level).size(); }

    const std::vector<Id>& members(std::size_t level) const { return levels_.at(level); }

    std::size_t level_of(Id id) const {
        if (id >= where_.size() || where_[id].level == npos)
            throw std::logic_error("LevelTable::level_of: id not present");
        return where_[id].level;
    }

    /// Lowest-index level with maximal occupancy. Linear scan: the table is
    /// small (about sqrt(population size) levels) and the scan runs once per
    /// deletion, so nothing fancier pays for itself.
    std::size_t argmax_level() const {
        std::size_t best = 0, best_occ = levels_[0].size();
        for (std::size_t i = 1; i < levels_.size(); ++i)
            if (levels_[i].size() > best_occ) {
                best = i;
                best_occ = levels_[i].size();
            }
        return best;
    }

    std::vector<std::size_t> occupancy_histogram() const {
        std::vector<std::size_t> h(levels_.size());
        for (std::size_t i = 0; i < levels_.size(); ++i) h[i] = levels_[i].size();
        return h;
    }

private:
    struct Slot {
        std::size_t level; // npos when id is absent
        std::size_t pos;   // index within levels_[level]
    };

    double f_min_, f_max_;
    std::vector<std::vector<Id>> levels_;
    std::vector<Slot> where_;
    std::size_t size_ = 0;
    std::uint64_t clamp_count_ = 0;
};

} // namespace fuds
