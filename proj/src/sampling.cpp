#include "randsat/sampling.hpp"

#include <random>
#include <stdexcept>

#include "randsat/threshold.hpp"

namespace randsat {

Clause sample_clause_replace(uint32_t n, uint32_t k, RandomStream& rng) {
    if (n == 0) throw std::invalid_argument("sample_clause_replace: n == 0");
    Clause c;
    c.reserve(k);
    for (uint32_t j = 0; j < k; ++j) {
        uint32_t lit = rng.uniform_below(2 * n);
        c.push_back(Lit{lit});
    }
    return c;
}

Formula sample_formula_fixed_m(uint32_t n, uint32_t k, uint64_t m,
                               RandomStream& rng) {
    Formula f(n, k);
    for (uint64_t i = 0; i < m; ++i) f.add_clause(sample_clause_replace(n, k, rng));
    return f;
}

uint64_t sample_m_at_threshold(uint32_t n, uint32_t k, RandomStream& rng) {
    double mean = threshold_density(k) * static_cast<double>(n);
    std::poisson_distribution<long long> pois(mean);
    long long m = pois(rng.engine());
    return m < 0 ? 0 : static_cast<uint64_t>(m);
}

Clause sample_planted_clause(const Assignment& planted, uint32_t k,
                             RandomStream& rng) {
    for (;;) {
        Clause c = sample_clause_replace(planted.size(), k, rng);
        if (eval_clause(c, planted)) return c;
    }
}

Clause sample_falsified_clause(const Assignment& anchor, uint32_t k,
                               RandomStream& rng) {
    uint32_t n = anchor.size();
    if (n == 0) throw std::invalid_argument("sample_falsified_clause: n == 0");
    Clause c;
    c.reserve(k);
    for (uint32_t j = 0; j < k; ++j) {
        uint32_t v = rng.uniform_below(n);
        // A literal is false under `anchor` when its polarity matches the
        // negation of the anchored value.
        c.push_back(Lit::make(v, anchor.get(v)));
    }
    return c;
}

Formula sample_planted_formula(const Assignment& planted, uint64_t m,
                               uint32_t k, RandomStream& rng) {
    Formula f(planted.size(), k);
    for (uint64_t i = 0; i < m; ++i)
        f.add_clause(sample_planted_clause(planted, k, rng));
    return f;
}

Assignment sample_assignment_uniform(uint32_t n, RandomStream& rng) {
    Assignment a(n);
    sample_assignment_uniform_into(a, rng);
    return a;
}

void sample_assignment_uniform_into(Assignment& a, RandomStream& rng) {
    uint32_t n = a.size();
    auto& words = a.words_mut();
    for (auto& w : words) w = rng.next_u64();
    if (n % 64 != 0 && !words.empty())
        words.back() &= (uint64_t{1} << (n % 64)) - 1;
}

Assignment sample_in_ball_exact(const Assignment& center, uint32_t d,
                                RandomStream& rng) {
    uint32_t n = center.size();
    if (d > n) throw std::invalid_argument("sample_in_ball_exact: d > n");
    Assignment a = center;
    // Floyd's subset sampling: uniform d-subset of [0, n).
    std::vector<bool> chosen(n, false);
    for (uint32_t j = n - d; j < n; ++j) {
        uint32_t t = rng.uniform_below(j + 1);
        if (chosen[t]) t = j;
        chosen[t] = true;
        a.flip(t);
    }
    return a;
}

}  // namespace randsat
