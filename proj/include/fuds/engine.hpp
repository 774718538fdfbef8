#pragma once

#include <cmath>
#include <cstddef>
#include <cstdint>
#include <limits>
#include <optional>
#include <stdexcept>
#include <utility>

#include "fuds/population.hpp"
#include "fuds/problem.hpp"
#include "fuds/rng.hpp"
#include "fuds/run_trace.hpp"
#include "fuds/schemes.hpp"
#include "fuds/stats/diversity.hpp"

namespace fuds {

/// Victim for fitness-uniform deletion: a uniformly random member of the
/// most-occupied fitness level, lowest level on ties. The caller removes it.
template <typename G>
LevelTable::Id fuds_delete(const Population<G>& pop, Rng& rng) {
    if (pop.size() == 0) throw std::logic_error("fuds_delete: population is empty");
    const auto& bucket = pop.levels().members(pop.levels().argmax_level());
    return bucket[uniform_index(rng, bucket.size())];
}

/// Victim chosen uniformly over the whole population.
template <typename G>
LevelTable::Id random_delete(const Population<G>& pop, Rng& rng) {
    if (pop.size() == 0) throw std::logic_error("random_delete: population is empty");
    return static_cast<LevelTable::Id>(uniform_index(rng, pop.size()));
}

/// Fittest of k members drawn uniformly with replacement. A tie among the
/// sampled entrants is broken uniformly: the running winner is displaced by
/// an equal-fitness entrant with probability 1/(ties so far), which leaves
/// every tied entrant equally likely. k = 1 is uniform selection.
template <typename G>
LevelTable::Id tournament_select(const Population<G>& pop, std::size_t k, Rng& rng) {
    if (pop.size() == 0) throw std::logic_error("tournament_select: population is empty");
    if (k < 1) throw std::invalid_argument("tournament_select: k must be at least 1");
    auto best = static_cast<LevelTable::Id>(uniform_index(rng, pop.size()));
    double best_f = pop.member(best).fitness;
    std::size_t ties = 1;
    for (std::size_t i = 1; i < k; ++i) {
        const auto c = static_cast<LevelTable::Id>(uniform_index(rng, pop.size()));
        const double f = pop.member(c).fitness;
        if (f > best_f) {
            best = c;
            best_f = f;
            ties = 1;
        } else if (f == best_f) {
            ++ties;
            if (uniform_index(rng, ties) == 0) best = c;
        }
    }
    return best;
}

template <typename G>
LevelTable::Id select_parent(const Population<G>& pop, const Selection& sel, Rng& rng) {
    if (sel.kind == Selection::Kind::uniform)
        return static_cast<LevelTable::Id>(uniform_index(rng, pop.size()));
    return tournament_select(pop, sel.tournament_size, rng);
}

/// What one cycle did: the slot the child landed in, and the victim freed to
/// make room (absent while the population is still growing). At capacity the
/// two coincide, so a child can never be deleted in the step that created it.
struct StepRecord {
    LevelTable::Id child;
    std::optional<LevelTable::Id> deleted;
};

/// Sizing, seeding and instrumentation for one run. Absent initial_size
/// means start at capacity; absent level_count means round(sqrt(capacity)).
/// diversity_cadence 0 disables sampling.
struct RunParams {
    std::size_t capacity = 0;
    std::optional<std::size_t> initial_size;
    std::optional<std::size_t> level_count;
    StopRule stop;
    std::uint64_t seed = 0;
    std::uint64_t diversity_cadence = 0;
    double top_band_width = 20.0;
};

inline std::size_t default_level_count(std::size_t capacity) {
    const auto n = static_cast<std::size_t>(
        std::llround(std::sqrt(static_cast<double>(capacity))));
    return n < 1 ? 1 : n;
}

/// Steady-state loop: each cycle selects parents, makes one child by
/// crossover (probability crossover_prob) or cloning, mutates it (always for
/// clones, with probability mutation_prob after a cross), evaluates it and
/// inserts it, deleting a victim first once the population is full.
///
/// Per-cycle draw order is part of the reproducibility contract:
///   crossover coin, first parent, [second parent, crossover's own draws],
///   [mutation coin], [mutation's own draws], [victim draw].
template <Problem P>
class Engine {
public:
    using Genome = typename P::genome_type;

    Engine(P problem, SchemeConfig scheme, const RunParams& params)
        : problem_(std::move(problem)), scheme_(scheme), rng_(params.seed) {
        if (params.capacity < 1)
            throw std::invalid_argument("Engine: capacity must be at least 1");
        const std::size_t initial = params.initial_size.value_or(params.capacity);
        if (initial < 1 || initial > params.capacity)
            throw std::invalid_argument("Engine: initial size must be in [1, capacity]");
        const std::size_t levels =
            params.level_count.value_or(default_level_count(params.capacity));
        if (levels < 1)
            throw std::invalid_argument("Engine: level count must be at least 1");
        if (!params.stop.valid())
            throw std::invalid_argument("Engine: stop rule must set at least one clause");
        const auto prob_ok = [](double p) { return p >= 0.0 && p <= 1.0; };
        if (!prob_ok(scheme_.crossover_prob) || !prob_ok(scheme_.mutation_prob))
            throw std::invalid_argument("Engine: probabilities must lie in [0, 1]");
        if (scheme_.selection.kind == Selection::Kind::tournament &&
            scheme_.selection.tournament_size < 1)
            throw std::invalid_argument("Engine: tournament size must be at least 1");

        pop_.emplace(params.capacity, problem_.fitness_bounds(), levels);
        stop_ = params.stop;
        cadence_ = params.diversity_cadence;
        band_width_ = params.top_band_width;

        trace_.problem = std::string(problem_.name());
        trace_.scheme = scheme_.name();
        trace_.capacity = params.capacity;
        trace_.initial_size = initial;
        trace_.level_count = levels;
        trace_.crossover_prob = scheme_.crossover_prob;
        trace_.mutation_prob = scheme_.mutation_prob;
        trace_.stop = stop_;
        trace_.seed = params.seed;
        trace_.diversity_cadence = cadence_;
        trace_.top_band_width = band_width_;
        trace_.f_min = pop_->levels().f_min();
        trace_.f_max = pop_->levels().f_max();

        best_fitness_ = -std::numeric_limits<double>::infinity();
        for (std::size_t i = 0; i < initial; ++i) {
            Genome g = problem_.random_genome(rng_);
            const double f = problem_.evaluate(g);
            const auto id = pop_->insert(std::move(g), f);
            if (f > best_fitness_) {
                best_fitness_ = f;
                best_genome_ = pop_->member(id).genome;
            }
        }
        trace_.best_points.push_back({0, best_fitness_});
        maybe_sample(true);
    }

    const Population<Genome>& population() const { return *pop_; }
    const RunTrace& trace() const { return trace_; }
    std::uint64_t cycle() const { return cycle_; }
    double best_fitness() const { return best_fitness_; }
    const Genome& best_genome() const { return best_genome_; }

    /// Stop clause that fires at the top of the current cycle, if any.
    std::optional<StopReason> stop_check() const {
        if (stop_.target_fitness && best_fitness_ >= *stop_.target_fitness)
            return StopReason::target_reached;
        const auto cap = static_cast<double>(pop_->capacity());
        if (stop_.stall_generations &&
            static_cast<double>(cycle_ - last_improvement_) >=
                *stop_.stall_generations * cap)
            return StopReason::stalled;
        if (stop_.max_generations &&
            static_cast<double>(cycle_) >= *stop_.max_generations * cap)
            return StopReason::max_generations;
        return std::nullopt;
    }

    /// Run one cycle. Callers driving the engine manually are expected to
    /// honour stop_check(); step() itself never refuses to run.
    StepRecord step() {
        const bool crossed = chance(rng_, scheme_.crossover_prob);
        const auto p1 = select_parent(*pop_, scheme_.selection, rng_);
        Genome child;
        if (crossed) {
            const auto p2 = select_parent(*pop_, scheme_.selection, rng_);
            child = problem_.crossover(pop_->member(p1).genome, pop_->member(p2).genome, rng_);
        } else {
            child = pop_->member(p1).genome;
        }
        const bool mutated = crossed ? chance(rng_, scheme_.mutation_prob) : true;
        if (mutated) problem_.mutate(child, rng_);
        const double f = problem_.evaluate(child);

        StepRecord rec{};
        if (!pop_->at_capacity()) {
            rec.child = pop_->insert(std::move(child), f);
        } else {
            const auto victim = scheme_.deletion == Deletion::fuds
                                    ? fuds_delete(*pop_, rng_)
                                    : random_delete(*pop_, rng_);
            pop_->replace(victim, std::move(child), f);
            rec.child = victim;
            rec.deleted = victim;
        }
        ++cycle_;
        if (f > best_fitness_) {
            best_fitness_ = f;
            best_genome_ = pop_->member(rec.child).genome;
            last_improvement_ = cycle_;
            trace_.best_points.push_back({cycle_, f});
        }
        maybe_sample(false);
        return rec;
    }

    /// Step until a stop clause fires; returns the reason and seals the trace.
    StopReason run_to_halt() {
        std::optional<StopReason> reason;
        while (!(reason = stop_check())) step();
        finalize(*reason);
        return *reason;
    }

    /// Seal the trace after the caller decided to stop (manual stepping).
    void finalize(StopReason reason) {
        trace_.stop_reason = reason;
        trace_.cycles = cycle_;
        trace_.best_fitness = best_fitness_;
        trace_.clamp_count = pop_->levels().clamp_count();
        trace_.final_histogram = pop_->levels().occupancy_histogram();
    }

private:
    void maybe_sample(bool initial) {
        if constexpr (BitGenome<Genome>) {
            if (cadence_ == 0) return;
            if (!initial && cycle_ % cadence_ != 0) return;
            double current_best = pop_->members()[0].fitness;
            for (const auto& m : pop_->members())
                if (m.fitness > current_best) current_best = m.fitness;
            const auto total = stats::population_diversity(*pop_);
            if (!total) return; // fewer than two members: nothing to measure
            trace_.diversity.push_back({cycle_, current_best, *total,
                                        stats::top_band_diversity(*pop_, band_width_)});
        } else {
            (void)initial;
        }
    }

    P problem_;
    SchemeConfig scheme_;
    Rng rng_;
    std::optional<Population<Genome>> pop_; // constructed after validation
    StopRule stop_;
    std::uint64_t cadence_ = 0;
    double band_width_ = 20.0;
    RunTrace trace_;
    Genome best_genome_{};
    double best_fitness_ = 0.0;
    std::uint64_t cycle_ = 0;
    std::uint64_t last_improvement_ = 0;
};

template <Problem P>
struct RunResult {
    RunTrace trace;
    typename P::genome_type best_genome;
    double best_fitness = 0.0;
};

/// Construct an engine, run it to its stop rule, and return the sealed trace.
template <Problem P>
RunResult<P> run(P problem, SchemeConfig scheme, const RunParams& params) {
    Engine<P> engine(std::move(problem), scheme, params);
    engine.run_to_halt();
    return RunResult<P>{engine.trace(), engine.best_genome(), engine.best_fitness()};
}

/// Cycles expressed in generations: one generation is `capacity` cycles.
inline double generations_of(std::uint64_t cycles, std::size_t capacity) {
    return static_cast<double>(cycles) / static_cast<double>(capacity);
}

} // namespace fuds
