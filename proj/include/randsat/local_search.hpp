// Bounded-radius local search around a starting assignment.

#pragma once

#include <cstdint>
#include <optional>

#include "randsat/cnf.hpp"
#include "randsat/rng.hpp"

namespace randsat {

struct SearchStats {
    uint64_t nodes = 0;        // branching-search calls, root included
    uint64_t clause_evals = 0; // individual clause evaluations
};

// Branching search: if some clause is falsified, one of its literals must be
// flipped on the way to any satisfying assignment within the remaining
// radius, so try each in clause order and recurse with radius - 1. Finds a
// satisfying assignment whenever one lies within Hamming distance `radius`
// of `start`; visits at most sum over j <= radius of width^j nodes.
// Branching always takes the lowest-indexed falsified clause and tries its
// literals left to right; duplicate literals are retried, not deduplicated.
std::optional<Assignment> sat_from_small_hd(const Formula& f,
                                            const Assignment& start,
                                            uint32_t radius,
                                            SearchStats* stats = nullptr);

// Reference search over the same ball: enumerates every assignment within
// Hamming distance `radius` of `center` (distance 0 first, flip sets in
// lexicographic order) and returns the first satisfying one.
// Requires radius <= n.
std::optional<Assignment> exhaustive_ball_search(const Formula& f,
                                                 const Assignment& center,
                                                 uint32_t radius,
                                                 SearchStats* stats = nullptr);

enum class SmallKStatus { Satisfiable, Unsatisfiable, Inconclusive };

struct SmallKResult {
    SmallKStatus status = SmallKStatus::Inconclusive;
    std::optional<Assignment> assignment;
    uint64_t restarts_used = 0;
    bool brute_forced = false;
    SearchStats stats;
};

struct SmallKOptions {
    uint64_t max_restarts = 1000;
    // Exhaustive sweep kicks in after restarts only at or below this size;
    // above it an unresolved run is Inconclusive, not Unsatisfiable.
    uint32_t brute_force_max_n = 26;
};

// Restart-driven solver for small widths: repeated random starts, each
// explored with sat_from_small_hd at radius ceil(n / (k + 1)), then an
// exhaustive sweep when n is small enough. Any returned assignment has been
// re-verified against f.
SmallKResult solve_small_k(const Formula& f, RandomStream& rng,
                           const SmallKOptions& opts = {});

}  // namespace randsat
