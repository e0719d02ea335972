#include "randsat/harness.hpp"

#include <cmath>
#include <fstream>
#include <iomanip>
#include <limits>
#include <sstream>
#include <stdexcept>

#include <json.hpp>

#include "randsat/analysis.hpp"
#include "randsat/brute_force.hpp"
#include "randsat/dimacs.hpp"
#include "randsat/sampling.hpp"

namespace randsat {

namespace fs = std::filesystem;
using nlohmann::json;

namespace {

const char* mode_name(GenMode m) {
    switch (m) {
        case GenMode::FixedM: return "fixed-m";
        case GenMode::ThresholdPoisson: return "threshold";
        case GenMode::Planted: return "planted";
    }
    return "?";
}

const char* outcome_name(SolveOutcome o) {
    return o == SolveOutcome::Found ? "found" : "not_found";
}

const char* reason_name(NotFoundReason r) {
    switch (r) {
        case NotFoundReason::None: return "none";
        case NotFoundReason::BudgetExhausted: return "budget_exhausted";
        case NotFoundReason::CapAborted: return "cap_aborted";
        case NotFoundReason::SmallKUnsatisfiable: return "small_k_unsatisfiable";
        case NotFoundReason::SmallKInconclusive: return "small_k_inconclusive";
    }
    return "?";
}

const char* test_mode_name(TestMode m) {
    return m == TestMode::AlwaysPositive ? "always_positive" : "thresholded";
}

void check_gen_spec(const GenSpec& s) {
    if (s.n == 0 || s.k == 0)
        throw std::invalid_argument("generate: n and k must be positive");
    if (s.count == 0)
        throw std::invalid_argument("generate: count must be positive");
}

fs::path instance_path(const GenSpec& s, uint32_t j, const char* ext) {
    std::ostringstream name;
    name << s.prefix << '_' << j << ext;
    return s.out_dir / name.str();
}

std::vector<std::string> instance_comments(const GenSpec& s, uint64_t m,
                                           uint64_t stream) {
    std::ostringstream line;
    line << "mode=" << mode_name(s.mode) << " n=" << s.n << " k=" << s.k
         << " m=" << m << " seed=" << s.seed << " stream=" << stream;
    return {line.str()};
}

std::string csv_num(double x) {
    if (std::isinf(x)) return x > 0 ? "inf" : "-inf";
    std::ostringstream os;
    os << std::setprecision(12) << x;
    return os.str();
}

}  // namespace

std::vector<GeneratedInstance> generate_instances(const GenSpec& spec) {
    check_gen_spec(spec);
    fs::create_directories(spec.out_dir);

    std::vector<GeneratedInstance> out;
    out.reserve(spec.count);
    for (uint32_t j = 0; j < spec.count; ++j) {
        RandomStream rng(spec.seed, j);
        GeneratedInstance inst;
        Formula f = Formula::strict(spec.n, spec.k, {});
        switch (spec.mode) {
            case GenMode::FixedM:
                f = sample_formula_fixed_m(spec.n, spec.k, spec.m, rng);
                break;
            case GenMode::ThresholdPoisson: {
                uint64_t m = sample_m_at_threshold(spec.n, spec.k, rng);
                f = sample_formula_fixed_m(spec.n, spec.k, m, rng);
                break;
            }
            case GenMode::Planted: {
                Assignment planted = sample_assignment_uniform(spec.n, rng);
                f = sample_planted_formula(planted, spec.m, spec.k, rng);
                inst.assign_path = instance_path(spec, j, ".assign");
                write_assignment_file(*inst.assign_path, planted);
                break;
            }
        }
        inst.m = f.num_clauses();
        inst.cnf_path = instance_path(spec, j, ".cnf");
        write_dimacs_file(f, inst.cnf_path.string(),
                          instance_comments(spec, inst.m, j));
        out.push_back(std::move(inst));
    }
    return out;
}

std::vector<GeneratedInstance> generate_unsat_corpus(const GenSpec& spec) {
    check_gen_spec(spec);
    if (spec.n > kBruteForceMaxN)
        throw std::invalid_argument(
            "generate_unsat_corpus: n beyond brute-force range");
    fs::create_directories(spec.out_dir);

    std::vector<GeneratedInstance> out;
    out.reserve(spec.count);
    const uint64_t max_attempts = uint64_t{1000} * spec.count;
    for (uint64_t t = 0; t < max_attempts && out.size() < spec.count; ++t) {
        RandomStream rng(spec.seed, t);
        Formula f = sample_formula_fixed_m(spec.n, spec.k, spec.m, rng);
        if (brute_force_solve(f)) continue;

        uint32_t j = static_cast<uint32_t>(out.size());
        auto comments = instance_comments(spec, spec.m, t);
        comments.push_back("unsatisfiable (verified by exhaustive check)");
        GeneratedInstance inst;
        inst.m = spec.m;
        inst.cnf_path = instance_path(spec, j, ".cnf");
        write_dimacs_file(f, inst.cnf_path.string(), comments);
        out.push_back(std::move(inst));
    }
    if (out.size() < spec.count)
        throw std::runtime_error(
            "generate_unsat_corpus: too few unsatisfiable draws; raise m "
            "or lower n");
    return out;
}

Assignment read_assignment_file(const fs::path& path, uint32_t n) {
    std::ifstream in(path);
    if (!in)
        throw std::runtime_error("cannot open assignment file: " +
                                 path.string());
    std::string token;
    if (!(in >> token))
        throw std::runtime_error("empty assignment file: " + path.string());
    Assignment a = Assignment::from_string(token);
    if (a.size() != n) {
        std::ostringstream msg;
        msg << "assignment file " << path.string() << " has " << a.size()
            << " variables, formula has " << n;
        throw std::runtime_error(msg.str());
    }
    return a;
}

void write_assignment_file(const fs::path& path, const Assignment& a) {
    std::ofstream out(path);
    if (!out)
        throw std::runtime_error("cannot write assignment file: " +
                                 path.string());
    out << a.to_string() << '\n';
}

SolveOutput run_solve_job(const SolveJob& job) {
    Formula f = read_dimacs_file(job.cnf_path.string());
    SolveOutput o;
    o.n = f.num_vars();
    o.k = f.width();
    o.m = f.num_clauses();
    o.params = make_params(f, job.overrides);
    RandomStream base(job.seed, kSolveStreamBase);
    SolveOptions so;
    so.workers = job.workers;
    o.result = alpha_sample_and_test(f, o.params, base, so);
    return o;
}

namespace {

json params_json(uint32_t n, uint32_t k, uint64_t m, const SolverParams& p) {
    return json{{"n", n},
                {"k", k},
                {"m", m},
                {"alpha_n", p.alpha_n},
                {"threshold_t", p.threshold_t},
                {"sample_budget", p.sample_budget},
                {"cap_s", p.cap_s},
                {"k_star", p.k_star},
                {"mode", test_mode_name(p.mode)}};
}

json result_json(const SolveResult& r) {
    json j{{"outcome", outcome_name(r.outcome)},
           {"reason", reason_name(r.reason)},
           {"samples_used", r.samples_used},
           {"set_size", r.set_size},
           {"searches_triggered", r.searches_triggered},
           {"test_clause_evals", r.test_clause_evals},
           {"search_clause_evals", r.search_clause_evals},
           {"search_nodes", r.search_nodes},
           {"delegated_small_k", r.delegated_small_k},
           {"wall_seconds", r.wall_seconds}};
    j["assignment"] =
        r.assignment ? json(r.assignment->to_string()) : json(nullptr);
    return j;
}

}  // namespace

std::string solve_output_json(const SolveJob& job, const SolveOutput& o) {
    json j{{"instance", job.cnf_path.string()},
           {"seed", job.seed},
           {"stream_base", kSolveStreamBase},
           {"workers", job.workers},
           {"params", params_json(o.n, o.k, o.m, o.params)},
           {"result", result_json(o.result)}};
    return j.dump(2) + "\n";
}

std::string suite_report_json(const SuiteReport& rep) {
    json meta = json::object();
    for (const auto& [key, value] : rep.meta) meta[key] = value;
    json checks = json::array();
    for (const auto& c : rep.checks)
        checks.push_back(json{{"name", c.name},
                              {"passed", c.passed},
                              {"observed", c.observed},
                              {"expected", c.expected},
                              {"tolerance", c.tolerance},
                              {"detail", c.detail}});
    json j{{"suite", rep.suite},
           {"passed", rep.passed()},
           {"meta", meta},
           {"checks", checks}};
    return j.dump(2) + "\n";
}

BenchReport run_bench(const BenchSpec& spec) {
    if (spec.n == 0 || spec.k == 0)
        throw std::invalid_argument("bench: n and k must be positive");
    BenchReport rep;
    rep.spec = spec;
    SolveOptions so;
    so.workers = spec.workers;

    for (uint32_t j = 0; j < spec.count; ++j) {
        RandomStream rng(spec.seed, j);
        std::optional<Assignment> planted;
        Formula f = Formula::strict(spec.n, spec.k, {});
        switch (spec.mode) {
            case GenMode::FixedM:
                f = sample_formula_fixed_m(spec.n, spec.k, spec.m, rng);
                break;
            case GenMode::ThresholdPoisson: {
                uint64_t m = sample_m_at_threshold(spec.n, spec.k, rng);
                f = sample_formula_fixed_m(spec.n, spec.k, m, rng);
                break;
            }
            case GenMode::Planted:
                planted = sample_assignment_uniform(spec.n, rng);
                f = sample_planted_formula(*planted, spec.m, spec.k, rng);
                break;
        }

        BenchRow row;
        row.index = j;
        row.m = f.num_clauses();
        row.params = make_params(f, spec.overrides);
        RandomStream base(spec.seed, kSolveStreamBase | j);
        row.thresholded = alpha_sample_and_test(f, row.params, base, so);

        if (spec.paired) {
            SolverParams ap = row.params;
            ap.mode = TestMode::AlwaysPositive;
            ap.cap_s = std::numeric_limits<double>::infinity();
            row.always_positive = alpha_sample_and_test(f, ap, base, so);
        }

        if (planted && spec.rate_samples > 0) {
            row.rates = estimate_rates_monte_carlo(
                f, row.params.alpha_n, row.params.threshold_t, *planted,
                spec.rate_samples, rng);
            double alpha = static_cast<double>(row.params.alpha_n) /
                           static_cast<double>(spec.n);
            // Membership-test units: one unit = one threshold test
            // (m clause evaluations). The CSV scales back to evals.
            row.predicted =
                predicted_runtime(1.0, *row.rates, alpha, spec.n, spec.k);
        }
        rep.rows.push_back(std::move(row));
    }
    return rep;
}

std::string bench_csv(const BenchReport& rep) {
    std::ostringstream os;
    os << "index,run,n,k,m,alpha_n,threshold_t,sample_budget,cap_s,outcome,"
          "reason,samples_used,set_size,searches_triggered,"
          "searches_per_1k_samples,test_clause_evals,search_clause_evals,"
          "search_nodes,total_clause_evals,wall_seconds,p_tp,p_fp,"
          "predicted_total_evals\n";
    auto emit = [&](const BenchRow& row, const char* tag,
                    const SolveResult& r, bool with_prediction) {
        double per_1k = r.samples_used == 0
                            ? 0.0
                            : 1000.0 * static_cast<double>(r.searches_triggered) /
                                  static_cast<double>(r.samples_used);
        os << row.index << ',' << tag << ',' << rep.spec.n << ','
           << rep.spec.k << ',' << row.m << ',' << row.params.alpha_n << ','
           << csv_num(row.params.threshold_t) << ','
           << row.params.sample_budget << ','
           << csv_num(tag[0] == 'a'
                          ? std::numeric_limits<double>::infinity()
                          : row.params.cap_s)
           << ',' << outcome_name(r.outcome) << ',' << reason_name(r.reason)
           << ',' << r.samples_used << ',' << r.set_size << ','
           << r.searches_triggered << ',' << csv_num(per_1k) << ','
           << r.test_clause_evals << ',' << r.search_clause_evals << ','
           << r.search_nodes << ',' << r.clause_evals() << ','
           << csv_num(r.wall_seconds) << ',';
        if (with_prediction && row.rates) {
            os << csv_num(row.rates->p_tp()) << ','
               << csv_num(row.rates->p_fp()) << ',';
            if (row.predicted && row.predicted->defined)
                os << csv_num(row.predicted->total *
                              static_cast<double>(row.m));
        } else {
            os << ",,";  // empty p_tp, p_fp, prediction
        }
        os << '\n';
    };
    for (const auto& row : rep.rows) {
        emit(row, "thresholded", row.thresholded, true);
        if (row.always_positive)
            emit(row, "always_positive", *row.always_positive, false);
    }
    return os.str();
}

}  // namespace randsat
