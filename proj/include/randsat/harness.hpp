// Workbench orchestration: instance generation to DIMACS files, solver runs
// wrapped with parameter resolution and JSON reporting, and benchmark
// batches with measured-versus-predicted cost tables.
//
// Stream convention: generation draws from low stream ids (instance j uses
// stream j of the seed), solver runs derive their per-sample streams from
// the high half (base id kSolveStreamBase, or kSolveStreamBase | j for
// benchmark instance j), so generating and solving under one seed never
// reuse random bytes.

#pragma once

#include <cstdint>
#include <filesystem>
#include <optional>
#include <string>
#include <vector>

#include "randsat/cnf.hpp"
#include "randsat/rates.hpp"
#include "randsat/solver.hpp"
#include "randsat/validate.hpp"

namespace randsat {

inline constexpr uint64_t kSolveStreamBase = uint64_t{1} << 63;

enum class GenMode {
    FixedM,            // m i.i.d. clauses
    ThresholdPoisson,  // m ~ Poisson(threshold density * n), then i.i.d.
    Planted,           // m clauses conditioned on a hidden assignment
};

struct GenSpec {
    GenMode mode = GenMode::FixedM;
    uint32_t n = 0;
    uint32_t k = 0;
    uint64_t m = 0;  // ignored in ThresholdPoisson mode
    uint32_t count = 1;
    uint64_t seed = 0;
    std::filesystem::path out_dir = ".";
    std::string prefix = "inst";
};

struct GeneratedInstance {
    std::filesystem::path cnf_path;
    // Planted mode writes the hidden assignment next to the CNF.
    std::optional<std::filesystem::path> assign_path;
    uint64_t m = 0;
};

// Writes `count` DIMACS files named <prefix>_<j>.cnf under out_dir.
// Deterministic: the same spec always produces byte-identical files.
std::vector<GeneratedInstance> generate_instances(const GenSpec&);

// Uniform fixed-m draws filtered to unsatisfiable formulas by exhaustive
// check (attempt t uses stream t; rejected attempts still consume their
// stream id). Requires n within brute-force range.
std::vector<GeneratedInstance> generate_unsat_corpus(const GenSpec&);

// One line of n '0'/'1' characters, position i = variable i.
Assignment read_assignment_file(const std::filesystem::path&, uint32_t n);
void write_assignment_file(const std::filesystem::path&, const Assignment&);

struct SolveJob {
    std::filesystem::path cnf_path;
    uint64_t seed = 0;
    ParamOverrides overrides;
    unsigned workers = 1;
};

struct SolveOutput {
    uint32_t n = 0;
    uint32_t k = 0;
    uint64_t m = 0;
    SolverParams params;
    SolveResult result;
};

SolveOutput run_solve_job(const SolveJob&);
std::string solve_output_json(const SolveJob&, const SolveOutput&);

std::string suite_report_json(const SuiteReport&);

struct BenchSpec {
    GenMode mode = GenMode::Planted;
    uint32_t n = 0;
    uint32_t k = 0;
    uint64_t m = 0;
    uint32_t count = 5;
    uint64_t seed = 0;
    ParamOverrides overrides;
    // Also run the always-positive baseline (uncapped) on each instance.
    bool paired = false;
    // Monte Carlo confusion-rate samples per instance; needs a planted
    // assignment for the labels, so only honored in Planted mode.
    uint64_t rate_samples = 0;
    unsigned workers = 1;
};

struct BenchRow {
    uint32_t index = 0;
    uint64_t m = 0;
    SolverParams params;
    SolveResult thresholded;
    std::optional<SolveResult> always_positive;
    std::optional<RateEstimates> rates;
    // Membership-test units (one unit = one full clause-count test).
    std::optional<RuntimePrediction> predicted;
};

struct BenchReport {
    BenchSpec spec;
    std::vector<BenchRow> rows;
};

BenchReport run_bench(const BenchSpec&);
std::string bench_csv(const BenchReport&);

}  // namespace randsat
