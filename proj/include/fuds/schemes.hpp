#pragma once

#include <cstddef>
#include <optional>
#include <stdexcept>
#include <string>

namespace fuds {

/// How the engine frees a slot when the population is full.
///   random: delete a uniformly random member.
///   fuds:   delete a uniformly random member of the most-occupied fitness
///           level (lowest level on ties), which pressures whatever fitness
///           region currently dominates and so keeps every level populated.
enum class Deletion { random, fuds };

/// Parent selection. Tournament of size k draws k members uniformly with
/// replacement and keeps the fittest (ties broken uniformly among the tied
/// entrants); k = 1 degenerates to uniform random selection.
struct Selection {
    enum class Kind { uniform, tournament };

    Kind kind = Kind::tournament;
    std::size_t tournament_size = 2;

    static Selection uniform() { return {Kind::uniform, 1}; }

    static Selection tournament(std::size_t k) {
        if (k < 1) throw std::invalid_argument("Selection: tournament size must be at least 1");
        return {Kind::tournament, k};
    }

    /// "RAND" or "TOUR<k>".
    std::string name() const {
        if (kind == Kind::uniform) return "RAND";
        return "TOUR" + std::to_string(tournament_size);
    }

    friend bool operator==(const Selection&, const Selection&) = default;
};

/// One cell of the scheme grid: how parents are chosen, how victims are
/// chosen, and the variation probabilities.
struct SchemeConfig {
    Selection selection;
    Deletion deletion = Deletion::random;
    double crossover_prob = 0.5; // child is a cross (else a clone)
    double mutation_prob = 0.5;  // applied to crossed children; clones always mutate

    /// Scheme label used across all reporting, e.g. "TOUR2-F", "RAND-R".
    std::string name() const {
        return selection.name() + (deletion == Deletion::fuds ? "-F" : "-R");
    }
};

/// A run halts as soon as any configured clause fires. At least one clause
/// must be set. Generations are cycles / capacity.
struct StopRule {
    std::optional<double> max_generations;
    std::optional<double> stall_generations; // no strict best-ever improvement for this long
    std::optional<double> target_fitness;    // best-ever >= target

    bool valid() const {
        return max_generations.has_value() || stall_generations.has_value() ||
               target_fitness.has_value();
    }
};

enum class StopReason { target_reached, stalled, max_generations };

inline const char* to_string(StopReason r) {
    switch (r) {
    case StopReason::target_reached: return "target";
    case StopReason::stalled: return "stall";
    default: return "max_generations";
    }
}

} // namespace fuds
