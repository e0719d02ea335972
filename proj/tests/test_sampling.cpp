#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include <cmath>
#include <map>
#include <vector>

#include "randsat/sampling.hpp"
#include "randsat/threshold.hpp"
#include "test_util.hpp"

using namespace randsat;

TEST_CASE("replacement clauses have the right shape") {
    RandomStream rng(1);
    for (int t = 0; t < 100; ++t) {
        Clause c = sample_clause_replace(9, 4, rng);
        REQUIRE(c.size() == 4);
        for (Lit l : c) CHECK(l.var() < 9);
    }
    CHECK_THROWS_AS(sample_clause_replace(0, 3, rng), std::invalid_argument);
}

TEST_CASE("replacement literals are uniform over the 2n choices") {
    RandomStream rng(2);
    const uint64_t draws = 160000;
    std::vector<uint64_t> counts(16, 0);
    for (uint64_t i = 0; i < draws; ++i) {
        Clause c = sample_clause_replace(8, 1, rng);
        ++counts[c[0].code];
    }
    std::vector<double> expected(16, draws / 16.0);
    CHECK(test_util::chi2_stat(counts, expected) < test_util::chi2_crit(15));
}

TEST_CASE("fixed-m formulas carry m clauses of width k") {
    RandomStream rng(3);
    Formula f = sample_formula_fixed_m(12, 3, 50, rng);
    CHECK(f.num_clauses() == 50);
    CHECK(f.width() == 3);
    CHECK(f.uniform_width());
    CHECK(sample_formula_fixed_m(12, 3, 0, rng).num_clauses() == 0);
}

TEST_CASE("threshold clause counts have the threshold mean") {
    RandomStream rng(4);
    const int draws = 20000;
    const uint32_t n = 100, k = 3;
    double lambda = threshold_density(k) * n;
    double sum = 0.0;
    for (int i = 0; i < draws; ++i)
        sum += static_cast<double>(sample_m_at_threshold(n, k, rng));
    double mean = sum / draws;
    double sigma = std::sqrt(lambda / draws);
    CHECK(std::abs(mean - lambda) < 3.0 * sigma);
}

TEST_CASE("planted clauses satisfy the plant and are uniform") {
    RandomStream rng(5);
    Assignment planted = sample_assignment_uniform(2, rng);
    const uint64_t draws = 120000;
    // n=2, k=2: 16 ordered literal pairs, of which one polarity pattern per
    // variable pair is falsified, leaving 12 equally likely clauses.
    std::vector<uint64_t> counts(16, 0);
    for (uint64_t i = 0; i < draws; ++i) {
        Clause c = sample_planted_clause(planted, 2, rng);
        REQUIRE(eval_clause(c, planted));
        ++counts[c[0].code * 4 + c[1].code];
    }
    std::vector<uint64_t> sat_counts;
    for (uint32_t cell = 0; cell < 16; ++cell) {
        Clause c{Lit{cell / 4}, Lit{cell % 4}};
        if (eval_clause(c, planted))
            sat_counts.push_back(counts[cell]);
        else
            CHECK(counts[cell] == 0);
    }
    REQUIRE(sat_counts.size() == 12);
    std::vector<double> expected(12, draws / 12.0);
    CHECK(test_util::chi2_stat(sat_counts, expected) <
          test_util::chi2_crit(11));
}

TEST_CASE("all-false clauses are falsified with uniform variables") {
    RandomStream rng(6);
    Assignment anchor = sample_assignment_uniform(8, rng);
    const uint64_t draws = 80000;
    std::vector<uint64_t> var_counts(8, 0);
    for (uint64_t i = 0; i < draws / 10; ++i) {
        Clause c = sample_falsified_clause(anchor, 3, rng);
        REQUIRE(c.size() == 3);
        CHECK_FALSE(eval_clause(c, anchor));
    }
    for (uint64_t i = 0; i < draws; ++i) {
        Clause c = sample_falsified_clause(anchor, 1, rng);
        ++var_counts[c[0].var()];
    }
    std::vector<double> expected(8, draws / 8.0);
    CHECK(test_util::chi2_stat(var_counts, expected) < test_util::chi2_crit(7));
}

TEST_CASE("planted formulas are satisfied by the plant") {
    RandomStream rng(7);
    Assignment planted = sample_assignment_uniform(20, rng);
    Formula f = sample_planted_formula(planted, 90, 3, rng);
    CHECK(f.num_clauses() == 90);
    CHECK(satisfies(f, planted));
}

TEST_CASE("uniform assignments are uniform and keep the zero tail") {
    RandomStream rng(8);
    const uint64_t draws = 160000;
    std::vector<uint64_t> counts(16, 0);
    for (uint64_t i = 0; i < draws; ++i)
        ++counts[sample_assignment_uniform(4, rng).to_index()];
    std::vector<double> expected(16, draws / 16.0);
    CHECK(test_util::chi2_stat(counts, expected) < test_util::chi2_crit(15));

    Assignment wide(130);
    for (int i = 0; i < 200; ++i) {
        sample_assignment_uniform_into(wide, rng);
        CHECK((wide.words().back() >> 2) == 0);
    }
}

TEST_CASE("ball samples sit at the exact distance") {
    RandomStream rng(9);
    Assignment center = sample_assignment_uniform(20, rng);
    for (uint32_t d : {0u, 1u, 5u, 20u}) {
        for (int t = 0; t < 50; ++t) {
            Assignment a = sample_in_ball_exact(center, d, rng);
            CHECK(hamming_distance(center, a) == d);
        }
    }
    CHECK_THROWS_AS(sample_in_ball_exact(center, 21, rng),
                    std::invalid_argument);
}

TEST_CASE("flipped sets are uniform over the shell") {
    RandomStream rng(10);
    Assignment center(5);
    const uint64_t draws = 50000;
    std::map<uint64_t, uint64_t> counts;
    for (uint64_t i = 0; i < draws; ++i) {
        Assignment a = sample_in_ball_exact(center, 2, rng);
        ++counts[a.to_index()];
    }
    // C(5,2) = 10 possible flip sets.
    REQUIRE(counts.size() == 10);
    std::vector<uint64_t> cells;
    for (const auto& [idx, c] : counts) cells.push_back(c);
    std::vector<double> expected(10, draws / 10.0);
    CHECK(test_util::chi2_stat(cells, expected) < test_util::chi2_crit(9));
}

TEST_CASE("samplers are deterministic per stream") {
    RandomStream a(11, 3), b(11, 3);
    Assignment pa = sample_assignment_uniform(30, a);
    Assignment pb = sample_assignment_uniform(30, b);
    CHECK(pa == pb);
    CHECK(sample_planted_formula(pa, 25, 3, a) ==
          sample_planted_formula(pb, 25, 3, b));
    CHECK(sample_m_at_threshold(50, 3, a) == sample_m_at_threshold(50, 3, b));
}
