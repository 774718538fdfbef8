#include <catch2/catch_amalgamated.hpp>

#include <map>
#include <vector>

#include "fuds/level_table.hpp"
#include "fuds/rng.hpp"

using fuds::FitnessBounds;
using fuds::LevelTable;

TEST_CASE("level_index maps fitness to equal-width levels", "[level_table]") {
    LevelTable t(FitnessBounds{0.0, 1.0}, 10);
    CHECK(t.level_index(0.0) == 0);
    CHECK(t.level_index(0.05) == 0);
    CHECK(t.level_index(0.35) == 3);
    CHECK(t.level_index(0.999) == 9);
    CHECK(t.level_index(1.0) == 9); // top interval is closed
}

TEST_CASE("level_index on a shifted range", "[level_table]") {
    LevelTable t(FitnessBounds{1.0, 4.0}, 3);
    CHECK(t.level_index(1.0) == 0);
    CHECK(t.level_index(1.999) == 0);
    CHECK(t.level_index(2.0) == 1);
    CHECK(t.level_index(3.5) == 2);
    CHECK(t.level_index(4.0) == 2);
}

TEST_CASE("out-of-range fitness clamps to the end levels and is counted", "[level_table]") {
    LevelTable t(FitnessBounds{0.0, 1.0}, 4);
    CHECK(t.level_index(-0.5) == 0);
    CHECK(t.level_index(2.0) == 3);

    t.add(0, -0.5);
    t.add(1, 0.5);
    t.add(2, 1.75);
    CHECK(t.clamp_count() == 2);
    CHECK(t.occupancy(0) == 1);
    CHECK(t.occupancy(2) == 1);
    CHECK(t.occupancy(3) == 1);
}

TEST_CASE("level bounds partition the range with a closed top", "[level_table]") {
    LevelTable t(FitnessBounds{0.0, 1.0}, 4);
    CHECK(t.level_bounds(0).first == 0.0);
    CHECK(t.level_bounds(0).second == 0.25);
    CHECK(t.level_bounds(3).first == 0.75);
    CHECK(t.level_bounds(3).second == 1.0);
}

TEST_CASE("construction rejects degenerate inputs", "[level_table]") {
    CHECK_THROWS_AS(LevelTable(FitnessBounds{1.0, 1.0}, 4), std::invalid_argument);
    CHECK_THROWS_AS(LevelTable(FitnessBounds{2.0, 1.0}, 4), std::invalid_argument);
    CHECK_THROWS_AS(LevelTable(FitnessBounds{0.0, 1.0}, 0), std::invalid_argument);
}

TEST_CASE("argmax_level prefers the lowest of tied maxima", "[level_table]") {
    LevelTable t(FitnessBounds{0.0, 1.0}, 4);
    CHECK(t.argmax_level() == 0); // empty table: every level ties at zero

    t.add(0, 0.9);
    CHECK(t.argmax_level() == 3);
    t.add(1, 0.1);
    CHECK(t.argmax_level() == 0); // tie 1-1 between levels 0 and 3
    t.add(2, 0.6);
    t.add(3, 0.65);
    CHECK(t.argmax_level() == 2);
}

TEST_CASE("membership stays coherent under random churn", "[level_table][property]") {
    fuds::Rng rng(20240817);
    LevelTable t(FitnessBounds{0.0, 1.0}, 7);
    std::map<LevelTable::Id, double> live;
    LevelTable::Id next_id = 0;

    for (int step = 0; step < 5000; ++step) {
        const bool grow = live.empty() || fuds::chance(rng, 0.55);
        if (grow) {
            const double f = -0.1 + 1.2 * fuds::uniform_real(rng); // sometimes out of range
            t.add(next_id, f);
            live[next_id] = f;
            ++next_id;
        } else {
            auto it = live.begin();
            std::advance(it, fuds::uniform_index(rng, live.size()));
            t.remove(it->first);
            live.erase(it);
        }

        REQUIRE(t.size() == live.size());
        // recount occupancies from the surviving fitnesses
        std::vector<std::size_t> expect(t.level_count(), 0);
        for (const auto& [id, f] : live) {
            ++expect[t.level_index(f)];
            REQUIRE(t.level_of(id) == t.level_index(f));
        }
        for (std::size_t l = 0; l < t.level_count(); ++l) REQUIRE(t.occupancy(l) == expect[l]);
    }
}

TEST_CASE("duplicate ids and absent ids are rejected", "[level_table]") {
    LevelTable t(FitnessBounds{0.0, 1.0}, 2);
    t.add(5, 0.5);
    CHECK_THROWS_AS(t.add(5, 0.7), std::logic_error);
    CHECK_THROWS_AS(t.remove(9), std::logic_error);
    CHECK_THROWS_AS(t.level_of(9), std::logic_error);
    t.remove(5);
    CHECK_THROWS_AS(t.remove(5), std::logic_error);
    CHECK(t.size() == 0);
}
