#include <catch2/catch_amalgamated.hpp>

#include <cmath>
#include <vector>

#include "fuds/engine.hpp"
#include "fuds/io/dimacs.hpp"
#include "fuds/io/tsp_io.hpp"
#include "fuds/problems/deceptive2d.hpp"
#include "fuds/problems/max3sat.hpp"
#include "fuds/problems/scp.hpp"
#include "fuds/problems/tsp.hpp"
#include "support/oracles.hpp"
#include "support/reference_engine.hpp"

using fuds::Engine;
using fuds::RunParams;
using fuds::SchemeConfig;
using fuds::Selection;

namespace {

template <typename P>
void lockstep(const P& prob, const SchemeConfig& scheme, std::size_t capacity,
              std::size_t initial, std::size_t levels, std::uint64_t seed,
              std::size_t cycles) {
    RunParams params;
    params.capacity = capacity;
    params.initial_size = initial;
    params.level_count = levels;
    params.stop.max_generations = 1e18; // stepped manually
    params.seed = seed;
    Engine<P> engine(prob, scheme, params);
    oracle::ReferenceEngine<P> ref(prob, scheme, capacity, initial, levels, seed);

    const auto compare_state = [&] {
        REQUIRE(engine.population().size() == ref.members().size());
        for (std::size_t id = 0; id < ref.members().size(); ++id) {
            const auto& got = engine.population().member(static_cast<fuds::LevelTable::Id>(id));
            REQUIRE(got.fitness == ref.members()[id].fitness);
            REQUIRE(got.genome == ref.members()[id].genome);
        }
        for (std::size_t l = 0; l < levels; ++l) {
            const auto& got = engine.population().levels().members(l);
            const auto& want = ref.buckets()[l];
            REQUIRE(std::vector<fuds::LevelTable::Id>(got.begin(), got.end()) == want);
        }
    };

    compare_state();
    for (std::size_t i = 0; i < cycles; ++i) {
        const auto got = engine.step();
        const auto want = ref.step();
        REQUIRE(got.child == want.child);
        REQUIRE(got.deleted == want.deleted);
        if (i % 500 == 0) compare_state();
    }
    compare_state();
    (void)ref.recounted_occupancy(); // final coherence sweep
}

} // namespace

TEST_CASE("production engine matches the naive reference in lockstep (deceptive)",
          "[engine][reference]") {
    const fuds::problems::Deceptive2D prob(0.2, 0.3, 0.1);
    lockstep(prob, SchemeConfig{Selection::tournament(3), fuds::Deletion::fuds, 0.25, 0.5},
             64, 10, 8, 20240819, 20000);
    lockstep(prob, SchemeConfig{Selection::uniform(), fuds::Deletion::random, 0.5, 0.5},
             32, 32, 6, 7, 2000);
}

TEST_CASE("production engine matches the naive reference in lockstep (max3sat)",
          "[engine][reference]") {
    const auto text = oracle::planted_3sat_dimacs(25, 80, 99);
    const fuds::problems::Max3Sat prob(fuds::io::parse_dimacs(text));
    lockstep(prob, SchemeConfig{Selection::tournament(4), fuds::Deletion::fuds, 0.5, 0.5},
             64, 8, 8, 123, 20000);
    lockstep(prob, SchemeConfig{Selection::tournament(2), fuds::Deletion::random, 0.9, 0.1},
             50, 50, 7, 321, 3000);
}

TEST_CASE("production engine matches the naive reference in lockstep (tsp, scp)",
          "[engine][reference]") {
    const fuds::problems::Tsp tsp(fuds::io::gen_random_tsp(7, 42));
    lockstep(tsp, SchemeConfig{Selection::tournament(3), fuds::Deletion::fuds, 0.5, 0.5},
             40, 6, 6, 51, 6000);

    fuds::Rng rng(12);
    const fuds::problems::Scp scp(oracle::random_scp(6, 9, rng));
    lockstep(scp, SchemeConfig{Selection::tournament(2), fuds::Deletion::fuds, 0.8, 0.2},
             40, 6, 6, 52, 6000);
}

namespace {

std::size_t spec_level(double f, double lo, double hi, std::size_t L) {
    if (f <= lo) return 0;
    if (f >= hi) return L - 1;
    const auto i = static_cast<std::size_t>(
        std::floor((f - lo) * static_cast<double>(L) / (hi - lo)));
    return i >= L ? L - 1 : i;
}

// Every FUDS deletion must hit the most-occupied level (lowest on ties),
// judged against a recount of the pre-deletion snapshot.
template <typename P>
std::size_t check_fuds_deletions(const P& prob, std::uint64_t seed, std::size_t deletions) {
    RunParams params;
    params.capacity = 40;
    params.initial_size = 40;
    params.level_count = 6;
    params.stop.max_generations = 1e18;
    params.seed = seed;
    Engine<P> engine(prob, SchemeConfig{Selection::tournament(3), fuds::Deletion::fuds, 0.5, 0.5},
                     params);
    const auto bounds = prob.fitness_bounds();

    std::size_t checked = 0;
    while (checked < deletions) {
        std::vector<double> snapshot;
        for (const auto& m : engine.population().members()) snapshot.push_back(m.fitness);
        const auto rec = engine.step();
        if (!rec.deleted) continue;
        std::vector<std::size_t> occ(6, 0);
        for (const double f : snapshot) ++occ[spec_level(f, bounds.min, bounds.max, 6)];
        std::size_t argmax = 0;
        for (std::size_t l = 1; l < 6; ++l)
            if (occ[l] > occ[argmax]) argmax = l;
        const auto victim_level = spec_level(snapshot[*rec.deleted], bounds.min, bounds.max, 6);
        REQUIRE(victim_level == argmax);
        REQUIRE(occ[victim_level] == occ[argmax]);
        ++checked;
    }
    return checked;
}

} // namespace

TEST_CASE("every fuds deletion hits the fullest level across all four problems",
          "[engine][deletion]") {
    CHECK(check_fuds_deletions(fuds::problems::Deceptive2D(0.2, 0.3, 0.1), 1, 250) == 250);
    CHECK(check_fuds_deletions(
              fuds::problems::Max3Sat(fuds::io::parse_dimacs(oracle::planted_3sat_dimacs(15, 40, 3))),
              2, 250) == 250);
    CHECK(check_fuds_deletions(fuds::problems::Tsp(fuds::io::gen_random_tsp(6, 4)), 3, 250) == 250);
    fuds::Rng rng(5);
    CHECK(check_fuds_deletions(fuds::problems::Scp(oracle::random_scp(5, 8, rng)), 4, 250) == 250);
}
