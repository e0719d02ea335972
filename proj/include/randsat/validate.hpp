// Statistical validation suites. Each suite runs seeded experiments, compares
// against closed-form expectations or exhaustive ground truth, and reports
// per-check pass/fail with the numbers that drove the decision. Tolerances
// are derived from the estimators themselves (binomial or sample-variance
// confidence radii), not hard-coded epsilons.

#pragma once

#include <cstdint>
#include <string>
#include <utility>
#include <vector>

namespace randsat {

struct Check {
    std::string name;
    bool passed = false;
    double observed = 0.0;
    double expected = 0.0;
    double tolerance = 0.0;  // allowed |observed - expected|
    std::string detail;
};

struct SuiteReport {
    std::string suite;
    std::vector<Check> checks;
    // Suite-specific data table, ready to write as a CSV file.
    std::string data_csv;
    // Parameters and seeds for the JSON sidecar.
    std::vector<std::pair<std::string, std::string>> meta;

    bool passed() const {
        for (const auto& c : checks)
            if (!c.passed) return false;
        return true;
    }
    Check& add(const std::string& name, double observed, double expected,
               double tolerance, const std::string& detail = "");
};

// Clause falsification rates: unconditioned clauses against uniform
// assignments (2^-k for several k), planted clauses against exact-distance
// assignments (closed form at each distance), and the two-term expansion of
// the planted expectation into unconditioned and all-false parts.
struct DecompositionParams {
    uint64_t seed = 1;
    uint32_t n = 64;
    uint32_t k = 4;
    uint32_t alpha_n = 16;
    uint64_t samples = 100000;
    std::vector<uint32_t> uniform_ks = {3, 4, 5};
    std::vector<double> alphas = {0.1, 0.25, 0.5};
};
SuiteReport run_decomposition_suite(const DecompositionParams& = {});

// Mean satisfying-assignment count of planted formulas versus the
// closed-form expectation, by exhaustive counting.
struct ExpectedCountParams {
    uint64_t seed = 1;
    uint32_t n = 12;
    uint32_t k = 3;
    uint64_t m = 20;
    uint32_t formulas = 2000;
    unsigned workers = 1;
};
SuiteReport run_expected_count_suite(const ExpectedCountParams& = {});

// Clause-count histograms in the fixed diagnostic regime: full-space series
// versus the ball around the planted assignment, averaged over seeds.
struct HistogramSuiteParams {
    uint64_t base_seed = 1;
    uint32_t seeds = 20;
    uint32_t n = 16;
    uint32_t k = 4;
    uint64_t m = 163;
    uint32_t alpha_n = 4;
    unsigned workers = 1;
};
SuiteReport run_histogram_suite(const HistogramSuiteParams& = {});

// Exhaustive confusion rates of the threshold test on a planted instance,
// at the derived threshold and at the diagnostic threshold 155.5.
struct RatesSuiteParams {
    uint64_t seed = 1;
    uint32_t n = 16;
    uint32_t k = 4;
    uint64_t m = 163;
    uint32_t alpha_n = 4;
    unsigned workers = 1;
};
SuiteReport run_rates_suite(const RatesSuiteParams& = {});

// Clause-count draws at the threshold density: mean, dispersion, and the
// probability mass inside the density window of half-width n.
struct PoissonSuiteParams {
    uint64_t seed = 1;
    uint32_t k = 4;
    uint32_t n_mean = 100;
    uint32_t n_window = 200;
    uint64_t draws = 100000;
};
SuiteReport run_poisson_suite(const PoissonSuiteParams& = {});

}  // namespace randsat
