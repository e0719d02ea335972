// Exhaustive enumeration over all 2^n assignments. Reference oracles for
// everything else; intended for n up to kBruteForceMaxN.

#pragma once

#include <cstdint>
#include <optional>

#include "randsat/cnf.hpp"

namespace randsat {

inline constexpr uint32_t kBruteForceMaxN = 26;

// Lowest-index satisfying assignment, if any. Throws std::invalid_argument
// when f.num_vars() > max_n.
std::optional<Assignment> brute_force_solve(const Formula& f,
                                            uint32_t max_n = kBruteForceMaxN,
                                            unsigned workers = 1);

// Exact number of satisfying assignments.
uint64_t count_satisfying(const Formula& f, uint32_t max_n = kBruteForceMaxN,
                          unsigned workers = 1);

}  // namespace randsat
