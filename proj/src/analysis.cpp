#include "randsat/analysis.hpp"

#include <cmath>
#include <stdexcept>

#include "randsat/logmath.hpp"
#include "randsat/parallel.hpp"
#include "randsat/sampling.hpp"

namespace randsat {

RateInterval RateEstimates::ci(uint64_t c) const {
    RateInterval iv;
    if (total == 0) return iv;
    double p = static_cast<double>(c) / static_cast<double>(total);
    if (exhaustive) {
        iv.lo = iv.hi = p;
        return iv;
    }
    const double z = 1.959963984540054;  // 97.5% normal quantile
    double half = z * std::sqrt(p * (1.0 - p) / static_cast<double>(total));
    iv.lo = std::max(0.0, p - half);
    iv.hi = std::min(1.0, p + half);
    return iv;
}

double expected_count_planted(uint32_t n, uint32_t k, uint64_t m) {
    if (n == 0 || k == 0)
        throw std::invalid_argument("expected_count_planted requires n,k >= 1");
    long double denom = std::exp2(static_cast<long double>(k)) - 1.0L;
    KahanSum sum;
    for (uint32_t i = 0; i <= n; ++i) {
        long double c = binomial_ld(n, i);
        long double survive =
            std::pow(static_cast<long double>(n - i) / n, k);
        long double keep = 1.0L - (1.0L - survive) / denom;
        long double term;
        if (keep <= 0.0L)
            term = (m == 0) ? c : 0.0L;
        else
            term = c * std::exp(static_cast<long double>(m) * std::log(keep));
        sum.add(term);
    }
    return static_cast<double>(sum.value());
}

double planted_unsat_prob(double alpha, uint32_t k) {
    if (k == 0) throw std::invalid_argument("planted_unsat_prob requires k >= 1");
    if (alpha < 0.0 || alpha > 1.0)
        throw std::invalid_argument("planted_unsat_prob: alpha outside [0,1]");
    return (1.0 - std::pow(1.0 - alpha, static_cast<double>(k))) /
           (std::exp2(static_cast<double>(k)) - 1.0);
}

double support_ratio_log2(uint64_t m, uint32_t n, uint32_t k) {
    if (k == 0) throw std::invalid_argument("support_ratio requires k >= 1");
    // log2(1 - 2^-k) via log1p for accuracy at large k.
    double log2_keep = std::log1p(-std::exp2(-static_cast<double>(k))) / M_LN2;
    return static_cast<double>(n) + static_cast<double>(m) * log2_keep;
}

double support_ratio(uint64_t m, uint32_t n, uint32_t k) {
    return std::exp2(support_ratio_log2(m, n, k));
}

namespace {

void check_enum_scale(const Formula& f, uint32_t max_n, const char* what) {
    if (f.num_vars() > max_n)
        throw std::invalid_argument(std::string(what) + " limited to " +
                                    std::to_string(max_n) + " variables");
}

// Per-assignment predicate flags over the full index space. Byte vectors,
// not vector<bool>: blocks write disjoint index ranges concurrently.
struct IndexFlags {
    std::vector<uint8_t> positive;
    std::vector<uint8_t> satisfying;
};

IndexFlags scan_all_assignments(const Formula& f, double threshold_t,
                                unsigned workers) {
    uint32_t n = f.num_vars();
    uint64_t total = uint64_t{1} << n;
    uint64_t m = f.num_clauses();
    IndexFlags flags;
    flags.positive.assign(total, 0);
    flags.satisfying.assign(total, 0);
    if (n == 0) {
        Assignment a(0);
        uint64_t c = num_clauses_sat(f, a);
        flags.positive[0] = static_cast<double>(c) >= threshold_t ? 1 : 0;
        flags.satisfying[0] = c == m ? 1 : 0;
        return flags;
    }

    struct Nothing {};
    auto map = [&](uint64_t lo, uint64_t hi, uint64_t) -> Nothing {
        Assignment a(n);
        for (uint64_t idx = lo; idx < hi; ++idx) {
            a.words_mut()[0] = idx;
            uint64_t c = num_clauses_sat(f, a);
            if (static_cast<double>(c) >= threshold_t) flags.positive[idx] = 1;
            if (c == m) flags.satisfying[idx] = 1;
        }
        return {};
    };
    block_map_reduce<Nothing>(total, workers, Nothing{}, map,
                              [](Nothing&, Nothing) {});
    return flags;
}

// Distance-to-satisfying-set labels up to radius, 0xFF means farther.
std::vector<uint8_t> distance_labels(uint32_t n,
                                     const std::vector<uint8_t>& satisfying,
                                     uint32_t radius) {
    uint64_t total = uint64_t{1} << n;
    std::vector<uint8_t> dist(total, 0xFF);
    for (uint64_t i = 0; i < total; ++i)
        if (satisfying[i]) dist[i] = 0;
    for (uint32_t d = 1; d <= radius; ++d) {
        for (uint64_t i = 0; i < total; ++i) {
            if (dist[i] != d - 1) continue;
            for (uint32_t v = 0; v < n; ++v) {
                uint64_t nb = i ^ (uint64_t{1} << v);
                if (dist[nb] == 0xFF) dist[nb] = static_cast<uint8_t>(d);
            }
        }
    }
    return dist;
}

}  // namespace

RateEstimates estimate_rates(const Formula& f, uint32_t alpha_n,
                             double threshold_t, const RateOptions& opts) {
    check_enum_scale(f, opts.max_n, "estimate_rates");
    if (alpha_n > f.num_vars())
        throw std::invalid_argument("estimate_rates: alpha_n > n");
    uint32_t n = f.num_vars();
    uint64_t total = uint64_t{1} << n;

    IndexFlags flags = scan_all_assignments(f, threshold_t, opts.workers);
    std::vector<uint8_t> dist = distance_labels(n, flags.satisfying, alpha_n);

    RateEstimates r;
    r.total = total;
    r.exhaustive = true;
    for (uint64_t i = 0; i < total; ++i) {
        bool close = dist[i] != 0xFF;
        bool pos = flags.positive[i];
        if (close && pos)
            ++r.true_positives;
        else if (!close && pos)
            ++r.false_positives;
        else if (close && !pos)
            ++r.false_negatives;
        else
            ++r.true_negatives;
    }
    return r;
}

RateEstimates estimate_rates_monte_carlo(const Formula& f, uint32_t alpha_n,
                                         double threshold_t,
                                         const Assignment& planted,
                                         uint64_t samples, RandomStream& rng) {
    if (planted.size() != f.num_vars())
        throw std::invalid_argument("estimate_rates_monte_carlo: size mismatch");
    RateEstimates r;
    r.total = samples;
    r.surrogate_labels = true;
    Assignment a(f.num_vars());
    for (uint64_t s = 0; s < samples; ++s) {
        sample_assignment_uniform_into(a, rng);
        bool pos = static_cast<double>(num_clauses_sat(f, a)) >= threshold_t;
        bool close = hamming_distance(a, planted) <= alpha_n;
        if (close && pos)
            ++r.true_positives;
        else if (!close && pos)
            ++r.false_positives;
        else if (close && !pos)
            ++r.false_negatives;
        else
            ++r.true_negatives;
    }
    return r;
}

double HistogramData::uniform_mean() const {
    if (uniform_total == 0) return 0.0;
    long double s = 0.0L;
    for (size_t c = 0; c < uniform_counts.size(); ++c)
        s += static_cast<long double>(uniform_counts[c]) * c;
    return static_cast<double>(s / uniform_total);
}

double HistogramData::ball_mean() const {
    if (ball_total == 0) return 0.0;
    long double s = 0.0L;
    for (size_t c = 0; c < ball_counts.size(); ++c)
        s += static_cast<long double>(ball_counts[c]) * c;
    return static_cast<double>(s / ball_total);
}

HistogramData histogram_num_sat(const Formula& f,
                                const std::optional<Assignment>& center,
                                uint32_t alpha_n,
                                const HistogramOptions& opts) {
    uint32_t n = f.num_vars();
    uint64_t m = f.num_clauses();
    HistogramData h;
    h.n = n;
    h.k = f.width();
    h.m = m;
    h.alpha_n = alpha_n;
    h.uniform_counts.assign(m + 1, 0);

    if (n == 0) {
        h.exhaustive = true;
        ++h.uniform_counts[num_clauses_sat(f, Assignment(0))];
        h.uniform_total = 1;
        if (center) {
            h.ball_counts = h.uniform_counts;
            h.ball_total = 1;
        }
        return h;
    }

    if (n <= opts.exhaustive_max_n) {
        h.exhaustive = true;
        uint64_t total = uint64_t{1} << n;
        using Counts = std::vector<uint64_t>;
        auto map = [&](uint64_t lo, uint64_t hi, uint64_t) -> Counts {
            Counts local(m + 1, 0);
            Assignment a(n);
            for (uint64_t idx = lo; idx < hi; ++idx) {
                a.words_mut()[0] = idx;
                ++local[num_clauses_sat(f, a)];
            }
            return local;
        };
        auto combine = [&](Counts& acc, Counts part) {
            for (size_t c = 0; c <= m; ++c) acc[c] += part[c];
        };
        h.uniform_counts = block_map_reduce<Counts>(total, opts.workers,
                                                    Counts(m + 1, 0), map,
                                                    combine);
        h.uniform_total = total;
    } else {
        if (!opts.rng)
            throw std::invalid_argument(
                "histogram_num_sat: sampled mode needs an rng");
        h.exhaustive = false;
        Assignment a(n);
        for (uint64_t s = 0; s < opts.samples; ++s) {
            sample_assignment_uniform_into(a, *opts.rng);
            ++h.uniform_counts[num_clauses_sat(f, a)];
        }
        h.uniform_total = opts.samples;
    }

    if (center) {
        if (center->size() != n)
            throw std::invalid_argument("histogram_num_sat: center size");
        h.ball_counts.assign(m + 1, 0);
        for_each_in_ball(*center, alpha_n, [&](const Assignment& a) {
            ++h.ball_counts[num_clauses_sat(f, a)];
            ++h.ball_total;
        });
    }
    return h;
}

void for_each_in_ball(const Assignment& center, uint32_t radius,
                      const std::function<void(const Assignment&)>& fn) {
    for (uint32_t d = 0; d <= radius; ++d) for_each_on_shell(center, d, fn);
}

void for_each_on_shell(const Assignment& center, uint32_t distance,
                       const std::function<void(const Assignment&)>& fn) {
    uint32_t n = center.size();
    if (distance > n)
        throw std::invalid_argument("for_each_on_shell: distance > n");
    if (distance == 0) {
        fn(center);
        return;
    }
    std::vector<uint32_t> comb(distance);
    for (uint32_t i = 0; i < distance; ++i) comb[i] = i;
    Assignment a = center;
    for (;;) {
        a = center;
        for (uint32_t v : comb) a.flip(v);
        fn(a);
        // next lexicographic combination
        uint32_t i = distance;
        bool advanced = false;
        while (i-- > 0) {
            if (comb[i] < n - distance + i) {
                ++comb[i];
                for (uint32_t j = i + 1; j < distance; ++j)
                    comb[j] = comb[j - 1] + 1;
                advanced = true;
                break;
            }
        }
        if (!advanced) return;
    }
}

FormulaClassification classify_formula(const Formula& f, uint32_t alpha_n,
                                       double threshold_t,
                                       const ClassifyOptions& opts) {
    check_enum_scale(f, opts.max_n, "classify_formula");
    if (alpha_n > f.num_vars())
        throw std::invalid_argument("classify_formula: alpha_n > n");
    uint32_t n = f.num_vars();
    uint32_t k = std::max(f.width(), 1u);
    uint64_t total = uint64_t{1} << n;

    IndexFlags flags = scan_all_assignments(f, threshold_t, opts.workers);

    FormulaClassification out;
    out.shell_only = opts.shell_only;
    std::vector<uint64_t> sat_idx;
    for (uint64_t i = 0; i < total; ++i) {
        if (flags.positive[i]) ++out.promising_count;
        if (flags.satisfying[i]) {
            ++out.satisfying_count;
            if (sat_idx.size() < opts.max_satisfying) sat_idx.push_back(i);
        }
    }
    if (out.satisfying_count > opts.max_satisfying)
        throw std::runtime_error(
            "classify_formula: too many satisfying assignments for the "
            "standard-assignment scan");

    long double cap =
        4.0L * n * n * n * std::exp2(static_cast<long double>(n)) /
        (binomial_ld(n, alpha_n) *
         std::pow(static_cast<long double>(k),
                   static_cast<long double>(alpha_n)));
    out.stuffed_cap = static_cast<double>(cap);
    out.is_stuffed =
        static_cast<long double>(out.promising_count) > cap;

    for (uint64_t idx : sat_idx) {
        Assignment a = Assignment::from_index(n, idx);
        uint64_t members = 0;
        uint64_t promising = 0;
        auto tally = [&](const Assignment& b) {
            ++members;
            if (flags.positive[b.to_index()]) ++promising;
        };
        if (opts.shell_only)
            for_each_on_shell(a, alpha_n, tally);
        else
            for_each_in_ball(a, alpha_n, tally);
        if (2 * promising >= members) out.standard_satisfying.push_back(a);
    }
    return out;
}

}  // namespace randsat
