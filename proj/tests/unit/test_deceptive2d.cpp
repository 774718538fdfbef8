#include <catch2/catch_amalgamated.hpp>

#include "fuds/problems/deceptive2d.hpp"
#include "fuds/rng.hpp"

using fuds::problems::Deceptive2D;
using Genome = Deceptive2D::Genome;

TEST_CASE("the four regions score 4, 2, 1, 3", "[deceptive2d]") {
    const Deceptive2D prob(0.2, 0.3, 0.1);
    CHECK(prob.evaluate({0.25, 0.35}) == 4.0); // both strips
    CHECK(prob.evaluate({0.50, 0.35}) == 2.0); // horizontal strip only
    CHECK(prob.evaluate({0.25, 0.80}) == 1.0); // vertical strip only
    CHECK(prob.evaluate({0.50, 0.50}) == 3.0); // the plateau
    CHECK(prob.evaluate({0.19, 0.29}) == 3.0); // just outside both strips
}

TEST_CASE("strip intervals are closed at both ends", "[deceptive2d]") {
    // dyadic parameters so the interval ends are exact in floating point
    const Deceptive2D prob(0.25, 0.5, 0.25);
    CHECK(prob.evaluate({0.25, 0.5}) == 4.0);  // lower corners
    CHECK(prob.evaluate({0.5, 0.75}) == 4.0);  // upper corners (a+delta, b+delta)
    CHECK(prob.evaluate({0.5, 0.8}) == 1.0);   // x still on the edge, y outside
    CHECK(prob.evaluate({0.51, 0.75}) == 2.0); // y on the edge, x outside
    CHECK(prob.evaluate({0.51, 0.76}) == 3.0);
    CHECK(prob.evaluate({0.24, 0.49}) == 3.0);
}

TEST_CASE("region measures on a fine grid match the strip widths", "[deceptive2d][property]") {
    const Deceptive2D prob(0.2, 0.3, 0.1);
    std::size_t count1 = 0, count2 = 0, count3 = 0, count4 = 0;
    const int n = 1000;
    for (int i = 0; i < n; ++i)
        for (int j = 0; j < n; ++j) {
            const double f = prob.evaluate(
                {static_cast<double>(i) / (n - 1), static_cast<double>(j) / (n - 1)});
            if (f == 1.0) ++count1;
            else if (f == 2.0) ++count2;
            else if (f == 3.0) ++count3;
            else ++count4;
        }
    // strips are 100 of 1000 grid columns (rows) wide
    CHECK(count4 == 100 * 100);
    CHECK(count1 == 100 * 900);
    CHECK(count2 == 900 * 100);
    CHECK(count3 == 900 * 900);
}

TEST_CASE("mutation redraws exactly one coordinate", "[deceptive2d]") {
    const Deceptive2D prob(0.2, 0.3, 0.1);
    fuds::Rng rng(20240820);
    std::size_t x_changed = 0;
    const int trials = 2000;
    for (int i = 0; i < trials; ++i) {
        Genome g{0.5, 0.5};
        prob.mutate(g, rng);
        const bool xc = g.x != 0.5, yc = g.y != 0.5;
        REQUIRE(xc != yc); // one and only one coordinate moves
        REQUIRE(g.x >= 0.0);
        REQUIRE(g.x < 1.0);
        REQUIRE(g.y >= 0.0);
        REQUIRE(g.y < 1.0);
        x_changed += xc;
    }
    // fair coin between coordinates
    CHECK(x_changed > trials * 0.45);
    CHECK(x_changed < trials * 0.55);
}

TEST_CASE("crossover pairs the first parent's x with the second's y", "[deceptive2d]") {
    const Deceptive2D prob(0.2, 0.3, 0.1);
    fuds::Rng rng(1);
    const Genome child = prob.crossover({0.11, 0.22}, {0.33, 0.44}, rng);
    CHECK(child.x == 0.11);
    CHECK(child.y == 0.44);
}

TEST_CASE("random genomes fill the unit square, x drawn first", "[deceptive2d]") {
    const Deceptive2D prob(0.2, 0.3, 0.1);
    fuds::Rng a(5), b(5);
    const Genome g = prob.random_genome(a);
    const double x = fuds::uniform_real(b), y = fuds::uniform_real(b);
    CHECK(g.x == x);
    CHECK(g.y == y);
}

TEST_CASE("strip parameters are validated", "[deceptive2d]") {
    CHECK_THROWS_AS(Deceptive2D(0.2, 0.3, 0.0), std::invalid_argument);
    CHECK_THROWS_AS(Deceptive2D(0.2, 0.3, -0.1), std::invalid_argument);
    CHECK_THROWS_AS(Deceptive2D(0.95, 0.3, 0.1), std::invalid_argument);
    CHECK_THROWS_AS(Deceptive2D(0.2, 0.95, 0.1), std::invalid_argument);
    CHECK_THROWS_AS(Deceptive2D(-0.05, 0.3, 0.1), std::invalid_argument);
    CHECK_NOTHROW(Deceptive2D(0.9, 0.9, 0.1));
}

TEST_CASE("fitness bounds are the region extremes", "[deceptive2d]") {
    const Deceptive2D prob(0.2, 0.3, 0.05);
    CHECK(prob.fitness_bounds().min == 1.0);
    CHECK(prob.fitness_bounds().max == 4.0);
    CHECK(prob.name() == "deceptive2d");
}
