#pragma once

#include <stdexcept>
#include <string_view>

#include "fuds/level_table.hpp"
#include "fuds/rng.hpp"

namespace fuds::problems {

/// Deceptive landscape on the unit square. Two thin strips cross it: a
/// vertical one at x in [a, a+delta] and a horizontal one at y in [b, b+delta]
/// (both closed). Fitness is 4 on their intersection, 2 on the rest of the
/// horizontal strip, 1 on the rest of the vertical strip, and 3 everywhere
/// else, so almost the entire square sits on a plateau one step below the
/// optimum while both strips leading toward it score worse than the plateau.
class Deceptive2D {
public:
    struct Genome {
        double x;
        double y;
        friend bool operator==(const Genome&, const Genome&) = default;
    };
    using genome_type = Genome;

    Deceptive2D(double a, double b, double delta) : a_(a), b_(b), delta_(delta) {
        if (!(delta > 0.0))
            throw std::invalid_argument("Deceptive2D: delta must be positive");
        if (!(a >= 0.0 && a + delta <= 1.0 && b >= 0.0 && b + delta <= 1.0))
            throw std::invalid_argument("Deceptive2D: strips must lie inside the unit square");
    }

    double evaluate(const Genome& g) const {
        const bool in_x = g.x >= a_ && g.x <= a_ + delta_;
        const bool in_y = g.y >= b_ && g.y <= b_ + delta_;
        if (in_x && in_y) return 4.0;
        if (in_y) return 2.0;
        if (in_x) return 1.0;
        return 3.0;
    }

    Genome random_genome(Rng& rng) const {
        const double x = uniform_real(rng);
        return Genome{x, uniform_real(rng)};
    }

    /// Replace one coordinate, chosen by coin flip, with a fresh uniform draw.
    void mutate(Genome& g, Rng& rng) const {
        const bool pick_x = chance(rng, 0.5);
        const double v = uniform_real(rng);
        (pick_x ? g.x : g.y) = v;
    }

    /// x from the first parent, y from the second.
    Genome crossover(const Genome& p1, const Genome& p2, Rng&) const {
        return Genome{p1.x, p2.y};
    }

    FitnessBounds fitness_bounds() const { return {1.0, 4.0}; }

    std::string_view name() const { return "deceptive2d"; }

    double a() const { return a_; }
    double b() const { return b_; }
    double delta() const { return delta_; }

private:
    double a_, b_, delta_;
};

} // namespace fuds::problems
