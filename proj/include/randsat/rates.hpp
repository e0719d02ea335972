// Confusion-rate estimates for the threshold test. "True" means the sampled
// assignment lies within the search radius of some satisfying assignment;
// "positive" means it passes the clause-count test.

#pragma once

#include <cstdint>

namespace randsat {

struct RateInterval {
    double lo = 0.0;
    double hi = 0.0;
};

struct RateEstimates {
    uint64_t true_positives = 0;
    uint64_t false_positives = 0;
    uint64_t false_negatives = 0;
    uint64_t true_negatives = 0;
    uint64_t total = 0;

    // Exhaustive estimates enumerate the full assignment space, so the
    // rates are exact population fractions and the intervals collapse.
    bool exhaustive = false;
    // Monte Carlo mode labels "true" by distance to a known planted
    // assignment rather than to the full satisfying set.
    bool surrogate_labels = false;

    double p_tp() const { return ratio(true_positives); }
    double p_fp() const { return ratio(false_positives); }
    double p_fn() const { return ratio(false_negatives); }
    double p_tn() const { return ratio(true_negatives); }

    // 95% confidence intervals (normal approximation, clamped to [0,1]).
    RateInterval ci_tp() const { return ci(true_positives); }
    RateInterval ci_fp() const { return ci(false_positives); }
    RateInterval ci_fn() const { return ci(false_negatives); }
    RateInterval ci_tn() const { return ci(true_negatives); }

  private:
    double ratio(uint64_t c) const {
        return total == 0 ? 0.0
                          : static_cast<double>(c) / static_cast<double>(total);
    }
    RateInterval ci(uint64_t c) const;
};

}  // namespace randsat
