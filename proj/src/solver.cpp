#include "randsat/solver.hpp"

#include <atomic>
#include <chrono>
#include <cmath>
#include <limits>
#include <stdexcept>
#include <thread>
#include <vector>

#include "randsat/logmath.hpp"
#include "randsat/sampling.hpp"

namespace randsat {

uint32_t compute_alpha_n(uint32_t n, uint32_t k) {
    if (k < 1) throw std::invalid_argument("compute_alpha_n requires k >= 1");
    double frac = static_cast<double>(n) * std::log2(static_cast<double>(k)) /
                  (16.0 * static_cast<double>(k));
    return static_cast<uint32_t>(std::floor(frac));
}

double compute_threshold(uint64_t m, uint32_t k, double alpha) {
    if (k < 1) throw std::invalid_argument("compute_threshold requires k >= 1");
    if (alpha < 0.0 || alpha > 1.0)
        throw std::invalid_argument("compute_threshold requires alpha in [0,1]");
    double miss = (1.0 - std::pow(1.0 - alpha, 2.0 * k)) /
                  (std::exp2(static_cast<double>(k)) - 1.0);
    return (1.0 - miss) * static_cast<double>(m);
}

Budgets compute_budgets(uint32_t n, uint32_t k, uint32_t alpha_n) {
    if (k < 1) throw std::invalid_argument("compute_budgets requires k >= 1");
    if (alpha_n > n) throw std::invalid_argument("compute_budgets: alpha_n > n");
    if (n > 114) throw std::overflow_error("compute_budgets: n too large");

    unsigned __int128 pow2n = static_cast<unsigned __int128>(1) << n;
    unsigned __int128 numer =
        static_cast<unsigned __int128>(n) * n * pow2n;
    unsigned __int128 ball = binomial_u128(n, alpha_n);
    if (ball == 0) ball = 1;  // n == 0
    unsigned __int128 budget = ceil_div_u128(numer, ball);
    if (budget > static_cast<unsigned __int128>(~uint64_t{0}))
        throw std::overflow_error(
            "compute_budgets: sample budget exceeds 64-bit range");

    Budgets b;
    b.sample_budget = static_cast<uint64_t>(budget);
    long double cap_num = 4.0L * n * n * n * std::exp2(static_cast<long double>(n));
    long double cap_den = binomial_ld(n, alpha_n) *
                          std::pow(static_cast<long double>(k),
                                    static_cast<long double>(alpha_n));
    b.cap_s = static_cast<double>(cap_num / cap_den + 1.0L);
    return b;
}

SolverParams make_params(const Formula& f, const ParamOverrides& o) {
    uint32_t n = f.num_vars();
    uint32_t k = f.width();
    uint64_t m = f.num_clauses();

    SolverParams p;
    p.k_star = o.k_star.value_or(kDefaultKStar);
    p.mode = o.mode;
    p.alpha_n = o.alpha_n ? *o.alpha_n : compute_alpha_n(n, std::max(k, 1u));
    if (p.alpha_n > n)
        throw std::invalid_argument("make_params: alpha_n > n");
    double alpha = n == 0 ? 0.0
                          : static_cast<double>(p.alpha_n) /
                                static_cast<double>(n);
    p.threshold_t =
        o.threshold_t ? *o.threshold_t
                      : compute_threshold(m, std::max(k, 1u), alpha);

    Budgets b = compute_budgets(n, std::max(k, 1u), p.alpha_n);
    p.cap_s = b.cap_s;
    uint64_t budget = b.sample_budget;
    if (o.budget_scale != 1.0) {
        if (o.budget_scale < 0.0)
            throw std::invalid_argument("make_params: negative budget scale");
        long double scaled =
            std::ceil(static_cast<long double>(budget) * o.budget_scale);
        if (scaled > static_cast<long double>(~uint64_t{0}))
            throw std::overflow_error("make_params: scaled budget overflow");
        budget = static_cast<uint64_t>(scaled);
    }
    p.sample_budget = o.sample_budget.value_or(budget);
    return p;
}

namespace {

struct Timer {
    std::chrono::steady_clock::time_point t0 = std::chrono::steady_clock::now();
    double seconds() const {
        return std::chrono::duration<double>(std::chrono::steady_clock::now() -
                                             t0)
            .count();
    }
};

SolveResult delegate_small_k(const Formula& f, const SolverParams& p,
                             const RandomStream& base, const Timer& timer) {
    SolveResult r;
    r.delegated_small_k = true;
    RandomStream rng = base;
    SmallKResult sk = solve_small_k(f, rng, p.small_k);
    r.search_nodes = sk.stats.nodes;
    r.search_clause_evals = sk.stats.clause_evals;
    switch (sk.status) {
        case SmallKStatus::Satisfiable:
            r.outcome = SolveOutcome::Found;
            r.reason = NotFoundReason::None;
            r.assignment = std::move(sk.assignment);
            break;
        case SmallKStatus::Unsatisfiable:
            r.reason = NotFoundReason::SmallKUnsatisfiable;
            break;
        case SmallKStatus::Inconclusive:
            r.reason = NotFoundReason::SmallKInconclusive;
            break;
    }
    r.wall_seconds = timer.seconds();
    return r;
}

// Outcome of one sample index, computed independently of loop state.
struct SampleOutcome {
    bool pass = false;
    std::optional<Assignment> found;
    uint64_t search_nodes = 0;
    uint64_t search_evals = 0;
};

SampleOutcome run_sample(const Formula& f, const SolverParams& p,
                         const RandomStream& base, uint64_t index,
                         Assignment& scratch) {
    SampleOutcome out;
    RandomStream rng = base.substream(index);
    sample_assignment_uniform_into(scratch, rng);
    uint64_t sat = num_clauses_sat(f, scratch);
    out.pass = p.mode == TestMode::AlwaysPositive ||
               static_cast<double>(sat) >= p.threshold_t;
    if (!out.pass) return out;
    SearchStats st;
    out.found = sat_from_small_hd(f, scratch, p.alpha_n, &st);
    out.search_nodes = st.nodes;
    out.search_evals = st.clause_evals;
    return out;
}

void check_sound(const Formula& f, const Assignment& a) {
    if (!satisfies(f, a))
        throw std::logic_error("alpha_sample_and_test: unsound result");
}

}  // namespace

SolveResult alpha_sample_and_test(const Formula& f, const SolverParams& p,
                                  const RandomStream& base,
                                  const SolveOptions& opts) {
    Timer timer;
    if (f.width() < p.k_star) return delegate_small_k(f, p, base, timer);

    const uint64_t m = f.num_clauses();
    SolveResult r;

    if (opts.workers <= 1) {
        Assignment scratch(f.num_vars());
        for (uint64_t i = 0; i < p.sample_budget; ++i) {
            r.samples_used = i + 1;
            r.test_clause_evals += m;

            RandomStream rng = base.substream(i);
            sample_assignment_uniform_into(scratch, rng);
            uint64_t sat = num_clauses_sat(f, scratch);
            bool pass = p.mode == TestMode::AlwaysPositive ||
                        static_cast<double>(sat) >= p.threshold_t;
            if (!pass) continue;

            ++r.set_size;
            if (static_cast<double>(r.set_size) > p.cap_s) {
                r.reason = NotFoundReason::CapAborted;
                r.wall_seconds = timer.seconds();
                return r;
            }
            ++r.searches_triggered;
            SearchStats st;
            auto found = sat_from_small_hd(f, scratch, p.alpha_n, &st);
            r.search_nodes += st.nodes;
            r.search_clause_evals += st.clause_evals;
            if (found) {
                check_sound(f, *found);
                r.outcome = SolveOutcome::Found;
                r.reason = NotFoundReason::None;
                r.assignment = std::move(found);
                r.wall_seconds = timer.seconds();
                return r;
            }
        }
        r.reason = NotFoundReason::BudgetExhausted;
        r.wall_seconds = timer.seconds();
        return r;
    }

    // Parallel path: fixed-size index blocks are filled by a worker pool,
    // then folded sequentially so counters, cap handling and the chosen
    // assignment replay the single-threaded order exactly.
    const uint64_t kBlock = 2048;
    for (uint64_t blk = 0; blk < p.sample_budget; blk += kBlock) {
        uint64_t hi = std::min(p.sample_budget, blk + kBlock);
        uint64_t count = hi - blk;
        std::vector<SampleOutcome> slot(count);
        std::atomic<uint64_t> cursor{0};
        auto work = [&] {
            Assignment scratch(f.num_vars());
            for (;;) {
                uint64_t j = cursor.fetch_add(1);
                if (j >= count) return;
                slot[j] = run_sample(f, p, base, blk + j, scratch);
            }
        };
        unsigned nthreads =
            static_cast<unsigned>(std::min<uint64_t>(opts.workers, count));
        std::vector<std::thread> pool;
        pool.reserve(nthreads);
        for (unsigned t = 0; t < nthreads; ++t) pool.emplace_back(work);
        for (auto& t : pool) t.join();

        for (uint64_t j = 0; j < count; ++j) {
            r.samples_used = blk + j + 1;
            r.test_clause_evals += m;
            if (!slot[j].pass) continue;
            ++r.set_size;
            if (static_cast<double>(r.set_size) > p.cap_s) {
                r.reason = NotFoundReason::CapAborted;
                r.wall_seconds = timer.seconds();
                return r;
            }
            ++r.searches_triggered;
            r.search_nodes += slot[j].search_nodes;
            r.search_clause_evals += slot[j].search_evals;
            if (slot[j].found) {
                check_sound(f, *slot[j].found);
                r.outcome = SolveOutcome::Found;
                r.reason = NotFoundReason::None;
                r.assignment = std::move(slot[j].found);
                r.wall_seconds = timer.seconds();
                return r;
            }
        }
    }
    r.reason = NotFoundReason::BudgetExhausted;
    r.wall_seconds = timer.seconds();
    return r;
}

std::vector<uint64_t> passing_sample_indices(const Formula& f,
                                             double threshold_t,
                                             const RandomStream& base,
                                             uint64_t num_samples) {
    std::vector<uint64_t> out;
    Assignment scratch(f.num_vars());
    for (uint64_t i = 0; i < num_samples; ++i) {
        RandomStream rng = base.substream(i);
        sample_assignment_uniform_into(scratch, rng);
        if (static_cast<double>(num_clauses_sat(f, scratch)) >= threshold_t)
            out.push_back(i);
    }
    return out;
}

RuntimePrediction predicted_runtime(double m_cost, const RateEstimates& rates,
                                    double alpha, uint32_t n, uint32_t k) {
    RuntimePrediction p;
    p.search_term = std::pow(static_cast<double>(k),
                             alpha * static_cast<double>(n));
    double ptp = rates.p_tp();
    if (ptp <= 0.0) {
        double inf = std::numeric_limits<double>::infinity();
        p.membership_term = inf;
        p.false_positive_term = inf;
        p.total = inf;
        p.defined = false;
        p.note = "true-positive rate is zero; expected work diverges";
        return p;
    }
    p.membership_term = m_cost / ptp;
    p.false_positive_term = (rates.p_fp() / ptp) * p.search_term;
    p.total = p.membership_term + p.search_term + p.false_positive_term;
    p.defined = true;
    return p;
}

}  // namespace randsat
