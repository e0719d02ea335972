// Clause-density model for random k-CNF near the satisfiability threshold.

#pragma once

#include <cstdint>

namespace randsat {

// Default width cutoff below which the branching solver delegates to the
// restart-based small-width solver.
inline constexpr uint32_t kDefaultKStar = 60;

// Threshold clause density 2^k ln 2 - (1 + ln 2) / 2. Requires k >= 1.
double threshold_density(uint32_t k);

struct ThresholdModel {
    uint32_t k = 0;
    uint32_t k_star = kDefaultKStar;
    double density = 0.0;  // threshold_density(k)

    static ThresholdModel make(uint32_t k, uint32_t k_star = kDefaultKStar);

    // Expected clause count at n variables.
    double mean_clauses(uint32_t n) const { return density * n; }
};

}  // namespace randsat
