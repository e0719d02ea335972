// Command-line workbench around the randsat library.
//
// Exit codes: 0 solved / all checks passed, 1 not found / check failed,
// 2 inconclusive, 3 runtime error, 4 usage error.

#include <cstdint>
#include <filesystem>
#include <fstream>
#include <iomanip>
#include <iostream>
#include <map>
#include <string>

#include <CLI11.hpp>
#include <json.hpp>

#include "randsat/dimacs.hpp"
#include "randsat/harness.hpp"
#include "randsat/validate.hpp"

namespace fs = std::filesystem;
using namespace randsat;

namespace {

void write_text(const std::string& path, const std::string& text) {
    if (path.empty()) {
        std::cout << text;
        return;
    }
    std::ofstream out(path);
    if (!out) throw std::runtime_error("cannot write " + path);
    out << text;
}

GenMode parse_mode(const std::string& s) {
    if (s == "fixed-m") return GenMode::FixedM;
    if (s == "threshold") return GenMode::ThresholdPoisson;
    if (s == "planted") return GenMode::Planted;
    throw CLI::ValidationError("--mode", "unknown mode " + s);
}

int exit_code_for(const SolveResult& r) {
    if (r.found()) return 0;
    return r.reason == NotFoundReason::SmallKInconclusive ? 2 : 1;
}

void print_report(const SuiteReport& rep) {
    std::cout << "suite " << rep.suite << ": "
              << (rep.passed() ? "PASS" : "FAIL") << '\n';
    for (const auto& c : rep.checks) {
        std::cout << "  [" << (c.passed ? "PASS" : "FAIL") << "] " << c.name
                  << " observed=" << std::setprecision(10) << c.observed
                  << " expected=" << c.expected << " tol=" << c.tolerance;
        if (!c.detail.empty()) std::cout << " (" << c.detail << ")";
        std::cout << '\n';
    }
}

void write_report_files(const SuiteReport& rep, const fs::path& dir) {
    fs::create_directories(dir);
    {
        std::ofstream csv(dir / (rep.suite + ".csv"));
        if (!csv) throw std::runtime_error("cannot write suite csv");
        csv << rep.data_csv;
    }
    std::ofstream js(dir / (rep.suite + ".json"));
    if (!js) throw std::runtime_error("cannot write suite json");
    js << suite_report_json(rep);
}

struct OverrideOptions {
    uint32_t alpha_n = 0;
    double threshold_t = 0.0;
    uint32_t k_star = 0;
    uint64_t sample_budget = 0;
    double budget_scale = 1.0;
    bool always_positive = false;

    CLI::Option* o_alpha = nullptr;
    CLI::Option* o_threshold = nullptr;
    CLI::Option* o_kstar = nullptr;
    CLI::Option* o_budget = nullptr;

    void attach(CLI::App* cmd) {
        o_alpha = cmd->add_option("--alpha-n", alpha_n,
                                  "Override the search radius (variables)");
        o_threshold = cmd->add_option("--threshold", threshold_t,
                                      "Override the clause-count threshold");
        o_kstar = cmd->add_option(
            "--k-star", k_star,
            "Width cutoff below which the small-width solver runs");
        o_budget = cmd->add_option("--budget", sample_budget,
                                   "Override the sample budget");
        cmd->add_option("--budget-scale", budget_scale,
                        "Scale the derived sample budget");
        cmd->add_flag("--always-positive", always_positive,
                      "Search every sample instead of gating on the test");
    }

    ParamOverrides resolve() const {
        ParamOverrides ov;
        if (o_alpha->count()) ov.alpha_n = alpha_n;
        if (o_threshold->count()) ov.threshold_t = threshold_t;
        if (o_kstar->count()) ov.k_star = k_star;
        if (o_budget->count()) ov.sample_budget = sample_budget;
        ov.budget_scale = budget_scale;
        ov.mode = always_positive ? TestMode::AlwaysPositive
                                  : TestMode::Thresholded;
        return ov;
    }
};

}  // namespace

int main(int argc, char** argv) {
    CLI::App app{"random k-CNF sample-and-test workbench"};
    app.require_subcommand(1);
    app.set_config("--config", "",
                   "Read options from a TOML/INI file (flags win)");
    app.set_version_flag("--version", "randsat 0.1.0");
    int rc = 0;

    // gen
    GenSpec gen_spec;
    std::string gen_mode = "fixed-m";
    std::string gen_out_dir = ".";
    bool gen_unsat = false;
    auto* gen = app.add_subcommand("gen", "Generate DIMACS instances");
    gen->add_option("--mode", gen_mode,
                    "fixed-m, threshold (clause count drawn at the "
                    "threshold density), or planted")
        ->check(CLI::IsMember({"fixed-m", "threshold", "planted"}))
        ->capture_default_str();
    gen->add_option("-n,--num-vars", gen_spec.n, "Variables")->required();
    gen->add_option("-k,--width", gen_spec.k, "Clause width")->required();
    auto* gen_m =
        gen->add_option("-m,--num-clauses", gen_spec.m,
                        "Clauses (required unless --mode threshold)");
    gen->add_option("--count", gen_spec.count, "Instances to generate")
        ->capture_default_str();
    gen->add_option("--seed", gen_spec.seed, "Base seed (instance j uses stream j)")
        ->envname("RANDSAT_SEED")
        ->capture_default_str();
    gen->add_option("--out-dir", gen_out_dir, "Output directory")
        ->capture_default_str();
    gen->add_option("--prefix", gen_spec.prefix, "Output file prefix")
        ->capture_default_str();
    gen->add_flag("--unsat", gen_unsat,
                  "Keep only draws verified unsatisfiable by exhaustive "
                  "check (fixed-m only)");
    gen->callback([&] {
        gen_spec.mode = parse_mode(gen_mode);
        gen_spec.out_dir = gen_out_dir;
        if (gen_spec.mode != GenMode::ThresholdPoisson && !gen_m->count())
            throw CLI::RequiredError("--num-clauses");
        if (gen_unsat && gen_spec.mode != GenMode::FixedM)
            throw CLI::ValidationError("--unsat", "requires --mode fixed-m");
        auto instances = gen_unsat ? generate_unsat_corpus(gen_spec)
                                   : generate_instances(gen_spec);
        for (const auto& inst : instances) {
            std::cout << inst.cnf_path.string();
            if (inst.assign_path)
                std::cout << "  (planted: " << inst.assign_path->string()
                          << ")";
            std::cout << '\n';
        }
    });

    // solve
    SolveJob job;
    std::string solve_cnf, solve_out;
    OverrideOptions solve_ov;
    auto* solve = app.add_subcommand("solve", "Run the sample-and-test solver");
    solve->add_option("cnf", solve_cnf, "DIMACS file")
        ->required()
        ->check(CLI::ExistingFile);
    solve->add_option("--seed", job.seed, "Seed for the sampling streams")
        ->envname("RANDSAT_SEED")
        ->capture_default_str();
    solve->add_option("--workers", job.workers, "Worker threads (same result)")
        ->capture_default_str();
    solve_ov.attach(solve);
    solve->add_option("--out", solve_out, "Write the JSON report here");
    solve->callback([&] {
        job.cnf_path = solve_cnf;
        job.overrides = solve_ov.resolve();
        SolveOutput out = run_solve_job(job);
        write_text(solve_out, solve_output_json(job, out));
        rc = exit_code_for(out.result);
    });

    // verify
    std::string ver_cnf, ver_assign, ver_result;
    auto* verify = app.add_subcommand(
        "verify", "Check an assignment against a DIMACS file");
    verify->add_option("cnf", ver_cnf, "DIMACS file")
        ->required()
        ->check(CLI::ExistingFile);
    auto* ver_a = verify->add_option("--assignment", ver_assign,
                                     "0/1 assignment file")
                      ->check(CLI::ExistingFile);
    auto* ver_r = verify->add_option("--result", ver_result,
                                     "solve JSON report to verify")
                      ->check(CLI::ExistingFile);
    ver_a->excludes(ver_r);
    verify->callback([&] {
        if (!ver_a->count() && !ver_r->count())
            throw CLI::RequiredError("--assignment or --result");
        Formula f = read_dimacs_file(ver_cnf);
        Assignment a(0);
        if (ver_a->count()) {
            a = read_assignment_file(ver_assign, f.num_vars());
        } else {
            std::ifstream in(ver_result);
            auto j = nlohmann::json::parse(in);
            const auto& field = j.at("result").at("assignment");
            if (field.is_null()) {
                std::cout << "no assignment in report (outcome "
                          << j.at("result").at("outcome").get<std::string>()
                          << ")\n";
                rc = 2;
                return;
            }
            a = Assignment::from_string(field.get<std::string>());
            if (a.size() != f.num_vars())
                throw std::runtime_error(
                    "report assignment size does not match formula");
        }
        auto bad = first_unsat_clause(f, a);
        if (!bad) {
            std::cout << "satisfied\n";
            rc = 0;
            return;
        }
        std::cout << "falsified clause " << *bad << ":";
        for (Lit l : f.clause(*bad))
            std::cout << ' ' << (l.negated() ? "-" : "")
                      << (l.var() + 1);
        std::cout << '\n';
        rc = 1;
    });

    // validate
    std::string suite = "all", val_out_dir;
    DecompositionParams dec;
    ExpectedCountParams exc;
    HistogramSuiteParams hist;
    RatesSuiteParams rates;
    PoissonSuiteParams poisson;
    unsigned val_workers = 1;
    auto* validate =
        app.add_subcommand("validate", "Run seeded statistical validation");
    validate
        ->add_option("--suite", suite,
                     "all, decomposition, expected-count, histogram, rates, "
                     "or poisson")
        ->check(CLI::IsMember({"all", "decomposition", "expected-count",
                               "histogram", "rates", "poisson"}))
        ->capture_default_str();
    auto* val_seed = validate->add_option("--seed", dec.seed, "Suite seed")
                         ->envname("RANDSAT_SEED");
    auto* val_samples = validate->add_option(
        "--samples", dec.samples, "Monte Carlo samples per estimate");
    validate->add_option("--formulas", exc.formulas,
                         "Formulas for the expected-count suite")
        ->capture_default_str();
    validate->add_option("--seeds", hist.seeds,
                         "Seeds averaged by the histogram suite")
        ->capture_default_str();
    validate->add_option("--workers", val_workers, "Worker threads")
        ->capture_default_str();
    validate->add_option("--out-dir", val_out_dir,
                         "Write <suite>.csv and <suite>.json here");
    validate->callback([&] {
        if (val_seed->count()) {
            exc.seed = dec.seed;
            hist.base_seed = dec.seed;
            rates.seed = dec.seed;
            poisson.seed = dec.seed;
        }
        if (val_samples->count()) poisson.draws = dec.samples;
        exc.workers = val_workers;
        hist.workers = val_workers;
        rates.workers = val_workers;

        std::vector<SuiteReport> reports;
        auto want = [&](const char* name) {
            return suite == "all" || suite == name;
        };
        if (want("decomposition")) reports.push_back(run_decomposition_suite(dec));
        if (want("expected-count")) reports.push_back(run_expected_count_suite(exc));
        if (want("histogram")) reports.push_back(run_histogram_suite(hist));
        if (want("rates")) reports.push_back(run_rates_suite(rates));
        if (want("poisson")) reports.push_back(run_poisson_suite(poisson));

        bool all_ok = true;
        for (const auto& rep : reports) {
            print_report(rep);
            if (!val_out_dir.empty()) write_report_files(rep, val_out_dir);
            all_ok = all_ok && rep.passed();
        }
        rc = all_ok ? 0 : 1;
    });

    // bench
    BenchSpec bench_spec;
    std::string bench_mode = "planted", bench_out;
    OverrideOptions bench_ov;
    auto* bench = app.add_subcommand(
        "bench", "Batch solver runs with measured and predicted costs");
    bench->add_option("--mode", bench_mode, "fixed-m, threshold, or planted")
        ->check(CLI::IsMember({"fixed-m", "threshold", "planted"}))
        ->capture_default_str();
    bench->add_option("-n,--num-vars", bench_spec.n, "Variables")->required();
    bench->add_option("-k,--width", bench_spec.k, "Clause width")->required();
    auto* bench_m =
        bench->add_option("-m,--num-clauses", bench_spec.m,
                          "Clauses (required unless --mode threshold)");
    bench->add_option("--count", bench_spec.count, "Instances")
        ->capture_default_str();
    bench->add_option("--seed", bench_spec.seed, "Base seed")
        ->envname("RANDSAT_SEED")
        ->capture_default_str();
    bench->add_flag("--paired", bench_spec.paired,
                    "Also run the uncapped always-positive baseline");
    bench->add_option("--rate-samples", bench_spec.rate_samples,
                      "Monte Carlo confusion-rate samples (planted mode)")
        ->capture_default_str();
    bench->add_option("--workers", bench_spec.workers, "Worker threads")
        ->capture_default_str();
    bench_ov.attach(bench);
    bench->add_option("--out", bench_out, "Write the CSV here");
    bench->callback([&] {
        bench_spec.mode = parse_mode(bench_mode);
        if (bench_spec.mode != GenMode::ThresholdPoisson && !bench_m->count())
            throw CLI::RequiredError("--num-clauses");
        bench_spec.overrides = bench_ov.resolve();
        BenchReport rep = run_bench(bench_spec);
        write_text(bench_out, bench_csv(rep));
    });

    try {
        app.parse(argc, argv);
    } catch (const CLI::ParseError& e) {
        int code = app.exit(e);
        return code == 0 ? 0 : 4;
    } catch (const std::exception& e) {
        std::cerr << "error: " << e.what() << '\n';
        return 3;
    }
    return rc;
}
