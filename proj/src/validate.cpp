#include "randsat/validate.hpp"

#include <cmath>
#include <sstream>

#include "randsat/analysis.hpp"
#include "randsat/sampling.hpp"
#include "randsat/solver.hpp"
#include "randsat/threshold.hpp"

namespace randsat {

Check& SuiteReport::add(const std::string& name, double observed,
                        double expected, double tolerance,
                        const std::string& detail) {
    Check c;
    c.name = name;
    c.observed = observed;
    c.expected = expected;
    c.tolerance = tolerance;
    c.passed = std::abs(observed - expected) <= tolerance;
    c.detail = detail;
    checks.push_back(std::move(c));
    return checks.back();
}

namespace {

// Streaming mean/variance.
struct Welford {
    uint64_t n = 0;
    double mean = 0.0;
    double m2 = 0.0;

    void add(double x) {
        ++n;
        double d = x - mean;
        mean += d / static_cast<double>(n);
        m2 += d * (x - mean);
    }
    double variance() const { return n < 2 ? 0.0 : m2 / static_cast<double>(n - 1); }
    double sd() const { return std::sqrt(variance()); }
    double se() const { return n == 0 ? 0.0 : sd() / std::sqrt(static_cast<double>(n)); }
};

double binom_sigma(double p, uint64_t n) {
    return std::sqrt(p * (1.0 - p) / static_cast<double>(n));
}

std::string fmt(double x) {
    std::ostringstream os;
    os.precision(10);
    os << x;
    return os.str();
}

}  // namespace

SuiteReport run_decomposition_suite(const DecompositionParams& prm) {
    SuiteReport rep;
    rep.suite = "decomposition";
    rep.meta = {{"seed", std::to_string(prm.seed)},
                {"n", std::to_string(prm.n)},
                {"k", std::to_string(prm.k)},
                {"alpha_n", std::to_string(prm.alpha_n)},
                {"samples", std::to_string(prm.samples)}};
    std::ostringstream csv;
    csv << "check,observed,expected,tolerance\n";

    // Unconditioned clause against an independent uniform assignment: each
    // literal is false with probability 1/2 independently.
    for (uint32_t k : prm.uniform_ks) {
        RandomStream rng(prm.seed, 100 + k);
        uint64_t falsified = 0;
        for (uint64_t s = 0; s < prm.samples; ++s) {
            Clause c = sample_clause_replace(prm.n, k, rng);
            Assignment a = sample_assignment_uniform(prm.n, rng);
            if (!eval_clause(c, a)) ++falsified;
        }
        double p = std::exp2(-static_cast<double>(k));
        double obs = static_cast<double>(falsified) /
                     static_cast<double>(prm.samples);
        auto& c = rep.add("uniform_falsification_k" + std::to_string(k), obs,
                          p, 3.0 * binom_sigma(p, prm.samples));
        csv << c.name << ',' << fmt(c.observed) << ',' << fmt(c.expected)
            << ',' << fmt(c.tolerance) << '\n';
    }

    // Planted clause against an assignment at exact distance round(alpha*n).
    for (double alpha : prm.alphas) {
        uint32_t d = static_cast<uint32_t>(std::lround(alpha * prm.n));
        double alpha_eff = static_cast<double>(d) / prm.n;
        double target = planted_unsat_prob(alpha_eff, prm.k);
        RandomStream rng(prm.seed, 200 + d);
        Assignment planted = sample_assignment_uniform(prm.n, rng);
        uint64_t falsified = 0;
        for (uint64_t s = 0; s < prm.samples; ++s) {
            Clause c = sample_planted_clause(planted, prm.k, rng);
            Assignment h = sample_in_ball_exact(planted, d, rng);
            if (!eval_clause(c, h)) ++falsified;
        }
        double obs = static_cast<double>(falsified) /
                     static_cast<double>(prm.samples);
        std::ostringstream name;
        name << "planted_falsification_d" << d;
        auto& c = rep.add(name.str(), obs, target,
                          3.0 * binom_sigma(target, prm.samples),
                          "alpha_eff=" + fmt(alpha_eff));
        csv << c.name << ',' << fmt(c.observed) << ',' << fmt(c.expected)
            << ',' << fmt(c.tolerance) << '\n';
    }

    // Two-term expansion: the planted expectation of f(clause, h) equals
    // w1 * unconditioned expectation - w2 * all-false expectation, with
    // w1 = 2^k/(2^k-1) and w2 = 1/(2^k-1), h on the exact-distance shell.
    double pow2k = std::exp2(static_cast<double>(prm.k));
    double w1 = pow2k / (pow2k - 1.0);
    double w2 = 1.0 / (pow2k - 1.0);
    RandomStream seed_rng(prm.seed, 300);
    Assignment anchor = sample_assignment_uniform(prm.n, seed_rng);

    struct Functional {
        std::string name;
        double (*value)(ClauseView, const Assignment&);
    };
    const Functional fns[] = {
        {"unsat_indicator",
         [](ClauseView c, const Assignment& h) {
             return eval_clause(c, h) ? 0.0 : 1.0;
         }},
        {"sat_literal_count",
         [](ClauseView c, const Assignment& h) {
             double t = 0.0;
             for (Lit l : c)
                 if (h.get(l.var()) != l.negated()) t += 1.0;
             return t;
         }},
    };
    int leg = 0;
    for (const auto& fn : fns) {
        Welford lhs, replace, allfalse;
        RandomStream r1(prm.seed, 400 + leg);
        RandomStream r2(prm.seed, 500 + leg);
        RandomStream r3(prm.seed, 600 + leg);
        ++leg;
        for (uint64_t s = 0; s < prm.samples; ++s) {
            Clause c = sample_planted_clause(anchor, prm.k, r1);
            Assignment h = sample_in_ball_exact(anchor, prm.alpha_n, r1);
            lhs.add(fn.value(c, h));
        }
        for (uint64_t s = 0; s < prm.samples; ++s) {
            Clause c = sample_clause_replace(prm.n, prm.k, r2);
            Assignment h = sample_in_ball_exact(anchor, prm.alpha_n, r2);
            replace.add(fn.value(c, h));
        }
        for (uint64_t s = 0; s < prm.samples; ++s) {
            Clause c = sample_falsified_clause(anchor, prm.k, r3);
            Assignment h = sample_in_ball_exact(anchor, prm.alpha_n, r3);
            allfalse.add(fn.value(c, h));
        }
        double rhs = w1 * replace.mean - w2 * allfalse.mean;
        double sigma = std::sqrt(lhs.se() * lhs.se() +
                                 w1 * w1 * replace.se() * replace.se() +
                                 w2 * w2 * allfalse.se() * allfalse.se());
        auto& c = rep.add("expansion_" + fn.name, lhs.mean, rhs, 3.0 * sigma,
                          "replace=" + fmt(replace.mean) +
                              " allfalse=" + fmt(allfalse.mean));
        csv << c.name << ',' << fmt(c.observed) << ',' << fmt(c.expected)
            << ',' << fmt(c.tolerance) << '\n';
    }

    rep.data_csv = csv.str();
    return rep;
}

SuiteReport run_expected_count_suite(const ExpectedCountParams& prm) {
    SuiteReport rep;
    rep.suite = "expected-count";
    rep.meta = {{"seed", std::to_string(prm.seed)},
                {"n", std::to_string(prm.n)},
                {"k", std::to_string(prm.k)},
                {"m", std::to_string(prm.m)},
                {"formulas", std::to_string(prm.formulas)}};
    std::ostringstream csv;
    csv << "formula,satisfying_count\n";

    Welford w;
    for (uint32_t t = 0; t < prm.formulas; ++t) {
        RandomStream rng(prm.seed, t);
        Assignment planted = sample_assignment_uniform(prm.n, rng);
        Formula f = sample_planted_formula(planted, prm.m, prm.k, rng);
        uint64_t cnt = count_satisfying(f, kBruteForceMaxN, prm.workers);
        w.add(static_cast<double>(cnt));
        csv << t << ',' << cnt << '\n';
    }
    double expected = expected_count_planted(prm.n, prm.k, prm.m);
    rep.add("mean_satisfying_count", w.mean, expected, 3.0 * w.se(),
            "sample_sd=" + fmt(w.sd()));
    // Degenerate case: with no clauses every assignment satisfies.
    rep.add("zero_clause_count", expected_count_planted(prm.n, prm.k, 0),
            std::exp2(static_cast<double>(prm.n)), 0.0);
    rep.data_csv = csv.str();
    return rep;
}

SuiteReport run_histogram_suite(const HistogramSuiteParams& prm) {
    SuiteReport rep;
    rep.suite = "histogram";
    rep.meta = {{"base_seed", std::to_string(prm.base_seed)},
                {"seeds", std::to_string(prm.seeds)},
                {"n", std::to_string(prm.n)},
                {"k", std::to_string(prm.k)},
                {"m", std::to_string(prm.m)},
                {"alpha_n", std::to_string(prm.alpha_n)}};

    std::vector<uint64_t> agg_uniform(prm.m + 1, 0), agg_ball(prm.m + 1, 0);
    Welford uniform_means, ball_means, gaps;
    std::ostringstream per_seed;
    per_seed << "seed,uniform_mean,ball_mean\n";
    for (uint32_t s = 0; s < prm.seeds; ++s) {
        uint64_t seed = prm.base_seed + s;
        RandomStream rng(seed);
        Assignment planted = sample_assignment_uniform(prm.n, rng);
        Formula f = sample_planted_formula(planted, prm.m, prm.k, rng);
        HistogramOptions ho;
        ho.workers = prm.workers;
        HistogramData h = histogram_num_sat(f, planted, prm.alpha_n, ho);
        uniform_means.add(h.uniform_mean());
        ball_means.add(h.ball_mean());
        gaps.add(h.ball_mean() - h.uniform_mean());
        for (size_t c = 0; c <= prm.m; ++c) {
            agg_uniform[c] += h.uniform_counts[c];
            agg_ball[c] += h.ball_counts[c];
        }
        per_seed << seed << ',' << fmt(h.uniform_mean()) << ','
                 << fmt(h.ball_mean()) << '\n';
    }

    double k2 = std::exp2(-static_cast<double>(prm.k));
    double expected_uniform = static_cast<double>(prm.m) * (1.0 - k2);
    double alpha =
        static_cast<double>(prm.alpha_n) / static_cast<double>(prm.n);
    double expected_ball = static_cast<double>(prm.m) *
                           (1.0 - planted_unsat_prob(alpha, prm.k));
    rep.add("uniform_series_mean", uniform_means.mean, expected_uniform, 0.5,
            "per-seed sd=" + fmt(uniform_means.sd()));
    rep.add("ball_series_mean", ball_means.mean, expected_ball, 1.0,
            "per-seed sd=" + fmt(ball_means.sd()));
    auto& dom = rep.add("ball_minus_uniform_mean", gaps.mean, 2.0, 0.0,
                        "one-sided: gap must be at least 2 clauses");
    dom.passed = gaps.mean >= 2.0;

    std::ostringstream csv;
    csv << "series,num_sat,count\n";
    for (size_t c = 0; c <= prm.m; ++c)
        csv << "uniform," << c << ',' << agg_uniform[c] << '\n';
    for (size_t c = 0; c <= prm.m; ++c)
        csv << "ball," << c << ',' << agg_ball[c] << '\n';
    csv << per_seed.str();
    rep.data_csv = csv.str();
    return rep;
}

SuiteReport run_rates_suite(const RatesSuiteParams& prm) {
    SuiteReport rep;
    rep.suite = "rates";
    rep.meta = {{"seed", std::to_string(prm.seed)},
                {"n", std::to_string(prm.n)},
                {"k", std::to_string(prm.k)},
                {"m", std::to_string(prm.m)},
                {"alpha_n", std::to_string(prm.alpha_n)}};

    RandomStream rng(prm.seed);
    Assignment planted = sample_assignment_uniform(prm.n, rng);
    Formula f = sample_planted_formula(planted, prm.m, prm.k, rng);

    double alpha =
        static_cast<double>(prm.alpha_n) / static_cast<double>(prm.n);
    double t_derived = compute_threshold(prm.m, prm.k, alpha);
    const double t_diag = 155.5;

    std::ostringstream csv;
    csv << "threshold,tp,fp,fn,tn,p_tp,p_fp,precision,close_rate\n";
    RateOptions ro;
    ro.workers = prm.workers;
    for (double t : {t_derived, t_diag}) {
        RateEstimates r = estimate_rates(f, prm.alpha_n, t, ro);
        double precision =
            r.true_positives + r.false_positives == 0
                ? 0.0
                : static_cast<double>(r.true_positives) /
                      static_cast<double>(r.true_positives + r.false_positives);
        double close_rate = static_cast<double>(r.true_positives +
                                                r.false_negatives) /
                            static_cast<double>(r.total);
        std::string tag = t == t_diag ? "diag" : "derived";
        auto& c1 = rep.add("tp_nonzero_" + tag,
                           static_cast<double>(r.true_positives), 1.0, 0.0,
                           "threshold=" + fmt(t));
        c1.passed = r.true_positives > 0;
        auto& c2 = rep.add("precision_beats_base_" + tag, precision,
                           close_rate, 0.0, "test must enrich for closeness");
        c2.passed = precision > close_rate;
        csv << fmt(t) << ',' << r.true_positives << ',' << r.false_positives
            << ',' << r.false_negatives << ',' << r.true_negatives << ','
            << fmt(r.p_tp()) << ',' << fmt(r.p_fp()) << ',' << fmt(precision)
            << ',' << fmt(close_rate) << '\n';
    }
    rep.data_csv = csv.str();
    return rep;
}

SuiteReport run_poisson_suite(const PoissonSuiteParams& prm) {
    SuiteReport rep;
    rep.suite = "poisson";
    rep.meta = {{"seed", std::to_string(prm.seed)},
                {"k", std::to_string(prm.k)},
                {"n_mean", std::to_string(prm.n_mean)},
                {"n_window", std::to_string(prm.n_window)},
                {"draws", std::to_string(prm.draws)}};

    double dk = threshold_density(prm.k);

    RandomStream rng(prm.seed, 1);
    Welford w;
    for (uint64_t s = 0; s < prm.draws; ++s)
        w.add(static_cast<double>(sample_m_at_threshold(prm.n_mean, prm.k, rng)));
    double lambda = dk * prm.n_mean;
    rep.add("mean", w.mean, lambda,
            3.0 * std::sqrt(lambda / static_cast<double>(prm.draws)));
    rep.add("variance_over_mean", w.variance() / w.mean, 1.0, 0.05);

    RandomStream rng2(prm.seed, 2);
    double lo = (dk - 1.0) * prm.n_window;
    double hi = (dk + 1.0) * prm.n_window;
    uint64_t inside = 0;
    for (uint64_t s = 0; s < prm.draws; ++s) {
        double m = static_cast<double>(
            sample_m_at_threshold(prm.n_window, prm.k, rng2));
        if (m >= lo && m <= hi) ++inside;
    }
    double frac = static_cast<double>(inside) / static_cast<double>(prm.draws);
    double bound =
        1.0 - 2.0 * std::exp2(-static_cast<double>(prm.n_window) /
                              (3.0 * M_LN2 * std::exp2(prm.k)));
    auto& c = rep.add("window_mass", frac, bound, 0.0,
                      "one-sided: observed mass must meet the bound");
    c.passed = frac >= bound;

    std::ostringstream csv;
    csv << "check,observed,expected\n";
    for (const auto& ch : rep.checks)
        csv << ch.name << ',' << fmt(ch.observed) << ',' << fmt(ch.expected)
            << '\n';
    rep.data_csv = csv.str();
    return rep;
}

}  // namespace randsat
