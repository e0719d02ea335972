// Sample-and-test solver. Draw uniform assignments; keep only those that
// satisfy at least a threshold number of clauses; run the bounded-radius
// branching search from each survivor. If the survivor multiset grows past
// a cap the instance is declared atypical and the run gives up. The answer
// is one-sided: a returned assignment always satisfies the formula, while
// NotFound carries no certificate.

#pragma once

#include <cstdint>
#include <optional>
#include <string>

#include "randsat/cnf.hpp"
#include "randsat/local_search.hpp"
#include "randsat/rates.hpp"
#include "randsat/rng.hpp"
#include "randsat/threshold.hpp"

namespace randsat {

// Search radius as a fraction of n: floor(n * lg(k) / (16 k)) flipped
// variables. Zero for small n or small k; grows like n lg(k) / (16 k).
uint32_t compute_alpha_n(uint32_t n, uint32_t k);

// Clause-count threshold (1 - (1 - (1-alpha)^(2k)) / (2^k - 1)) * m.
// alpha = 0 degenerates to m: only exact satisfaction passes.
double compute_threshold(uint64_t m, uint32_t k, double alpha);

struct Budgets {
    // ceil(n^2 * 2^n / C(n, alpha_n)) sampling attempts.
    uint64_t sample_budget = 0;
    // 4 n^3 2^n / (C(n, alpha_n) k^alpha_n) + 1 survivors before aborting.
    double cap_s = 0.0;
};

// Exact integer/long-double evaluation; throws std::overflow_error when the
// intermediate products leave 128-bit range (n far beyond feasible scale).
Budgets compute_budgets(uint32_t n, uint32_t k, uint32_t alpha_n);

enum class TestMode {
    Thresholded,     // clause-count test gates each search
    AlwaysPositive,  // every sample is searched (exhaustive-style baseline)
};

struct SolverParams {
    uint32_t alpha_n = 0;
    double threshold_t = 0.0;
    uint64_t sample_budget = 0;
    double cap_s = 0.0;
    uint32_t k_star = kDefaultKStar;
    TestMode mode = TestMode::Thresholded;
    SmallKOptions small_k;
};

struct ParamOverrides {
    std::optional<uint32_t> alpha_n;
    std::optional<double> threshold_t;
    std::optional<uint32_t> k_star;
    std::optional<uint64_t> sample_budget;
    double budget_scale = 1.0;
    TestMode mode = TestMode::Thresholded;
};

// Parameters derived from the formula shape, with optional overrides.
// Scaling applies to the derived budget before any explicit budget override.
SolverParams make_params(const Formula& f, const ParamOverrides& o = {});

enum class SolveOutcome { Found, NotFound };

enum class NotFoundReason {
    None,             // outcome is Found
    BudgetExhausted,
    CapAborted,       // survivor count exceeded cap_s
    SmallKUnsatisfiable,
    SmallKInconclusive,
};

struct SolveResult {
    SolveOutcome outcome = SolveOutcome::NotFound;
    NotFoundReason reason = NotFoundReason::BudgetExhausted;
    std::optional<Assignment> assignment;

    uint64_t samples_used = 0;
    uint64_t set_size = 0;            // test-passing samples seen
    uint64_t searches_triggered = 0;  // never exceeds set_size
    uint64_t test_clause_evals = 0;   // from threshold tests
    uint64_t search_clause_evals = 0; // from branching searches
    uint64_t search_nodes = 0;
    bool delegated_small_k = false;
    double wall_seconds = 0.0;

    bool found() const { return outcome == SolveOutcome::Found; }
    uint64_t clause_evals() const {
        return test_clause_evals + search_clause_evals;
    }
};

struct SolveOptions {
    unsigned workers = 1;
};

// Runs the sampling loop with per-index derived streams (index i draws from
// base.substream(i)), so the set of test-passing indices and the returned
// result are identical for every worker count. Formulas below the k_star
// width cutoff are delegated to solve_small_k. Any Found assignment has
// been re-verified against f before return.
SolveResult alpha_sample_and_test(const Formula& f, const SolverParams& p,
                                  const RandomStream& base,
                                  const SolveOptions& opts = {});

// Indices in [0, num_samples) whose sampled assignment passes the
// threshold, under the same per-index stream derivation as the solver.
std::vector<uint64_t> passing_sample_indices(const Formula& f, double threshold_t,
                                             const RandomStream& base,
                                             uint64_t num_samples);

struct RuntimePrediction {
    double membership_term = 0.0;      // M / p_TP
    double search_term = 0.0;          // k^(alpha n)
    double false_positive_term = 0.0;  // (p_FP / p_TP) * k^(alpha n)
    double total = 0.0;
    bool defined = false;  // false when p_TP is zero
    std::string note;
};

// Expected-work model in units of the membership-test cost M: sampling
// until a true positive, one search, and the false-positive searches paid
// along the way.
RuntimePrediction predicted_runtime(double m_cost, const RateEstimates& rates,
                                    double alpha, uint32_t n, uint32_t k);

}  // namespace randsat
