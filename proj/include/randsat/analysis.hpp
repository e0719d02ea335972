// Closed-form expectations and exhaustive diagnostics used to validate the
// sampler and the solver against ground truth at desk scale.

#pragma once

#include <cstdint>
#include <functional>
#include <optional>
#include <vector>

#include "randsat/brute_force.hpp"
#include "randsat/cnf.hpp"
#include "randsat/rates.hpp"
#include "randsat/rng.hpp"

namespace randsat {

// Expected number of satisfying assignments of a planted random formula:
// sum over distance i of C(n,i) * (1 - (1 - (1 - i/n)^k) / (2^k - 1))^m.
// Exact binomials for n <= 67, log-domain beyond; compensated summation.
double expected_count_planted(uint32_t n, uint32_t k, uint64_t m);

// Probability that a planted clause is falsified by an assignment at
// distance exactly alpha * n from the planted one:
// (1 - (1 - alpha)^k) / (2^k - 1).
double planted_unsat_prob(double alpha, uint32_t k);

// Ratio of planted support to unconditioned support over m-clause formulas:
// 2^n (1 - 2^-k)^m, evaluated in the log domain. Bounded by 2^n e^(-m/2^k).
double support_ratio(uint64_t m, uint32_t n, uint32_t k);
double support_ratio_log2(uint64_t m, uint32_t n, uint32_t k);

struct RateOptions {
    uint32_t max_n = kBruteForceMaxN;  // exhaustive-mode size limit
    unsigned workers = 1;
};

// Exact confusion rates of the threshold test at radius alpha_n, by full
// enumeration: "true" means within alpha_n of some satisfying assignment
// (computed by layered expansion from the satisfying set), "positive" means
// num_clauses_sat >= threshold_t.
RateEstimates estimate_rates(const Formula& f, uint32_t alpha_n,
                             double threshold_t, const RateOptions& = {});

// Monte Carlo variant for sizes beyond enumeration. Labels "true" by
// distance to the given planted assignment (surrogate for the full
// satisfying set) and carries binomial confidence intervals.
RateEstimates estimate_rates_monte_carlo(const Formula& f, uint32_t alpha_n,
                                         double threshold_t,
                                         const Assignment& planted,
                                         uint64_t samples, RandomStream& rng);

struct HistogramData {
    // Identifying metadata; threshold_t and seed are caller-provided.
    uint32_t n = 0;
    uint32_t k = 0;
    uint64_t m = 0;
    double threshold_t = 0.0;
    uint32_t alpha_n = 0;
    uint64_t seed = 0;

    // counts[c] = assignments satisfying exactly c clauses.
    std::vector<uint64_t> uniform_counts;
    std::vector<uint64_t> ball_counts;  // empty when no center given
    uint64_t uniform_total = 0;
    uint64_t ball_total = 0;
    bool exhaustive = true;

    double uniform_mean() const;
    double ball_mean() const;
};

struct HistogramOptions {
    uint32_t exhaustive_max_n = 24;
    uint64_t samples = uint64_t{1} << 20;  // used above exhaustive_max_n
    RandomStream* rng = nullptr;           // required in sampled mode
    unsigned workers = 1;
};

// Distribution of num_clauses_sat over all assignments (exhaustive up to
// exhaustive_max_n, sampled above) and, when `center` is given, over the
// ball of radius alpha_n around it (always exhaustive over the ball).
HistogramData histogram_num_sat(const Formula& f,
                                const std::optional<Assignment>& center,
                                uint32_t alpha_n,
                                const HistogramOptions& = {});

struct FormulaClassification {
    uint64_t promising_count = 0;  // assignments passing the threshold
    double stuffed_cap = 0.0;      // 4 n^3 2^n / (C(n,alpha_n) k^alpha_n)
    bool is_stuffed = false;       // promising_count > stuffed_cap
    uint64_t satisfying_count = 0;
    // Satisfying assignments whose surrounding ball (or shell, with
    // shell_only) is at least half promising.
    std::vector<Assignment> standard_satisfying;
    bool shell_only = false;
};

struct ClassifyOptions {
    bool shell_only = false;  // use the exact-distance shell, not the ball
    uint32_t max_n = kBruteForceMaxN;
    uint64_t max_satisfying = uint64_t{1} << 20;
    unsigned workers = 1;
};

FormulaClassification classify_formula(const Formula& f, uint32_t alpha_n,
                                       double threshold_t,
                                       const ClassifyOptions& = {});

// Enumerates assignments within Hamming distance `radius` of `center`
// (distance 0 first, flip sets lexicographic) and calls fn on each.
void for_each_in_ball(const Assignment& center, uint32_t radius,
                      const std::function<void(const Assignment&)>& fn);
void for_each_on_shell(const Assignment& center, uint32_t distance,
                       const std::function<void(const Assignment&)>& fn);

}  // namespace randsat
