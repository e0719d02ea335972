// Samplers for the random k-CNF model and related distributions.
//
// Clauses are drawn with replacement: each of the k literal slots gets an
// independent uniform variable and an independent uniform polarity, so a
// clause may repeat variables or contain complementary literals. Planted
// clauses are uniform over the (2^k - 1) n^k clauses satisfied by the hidden
// assignment, realized by rejection from the unconditioned draw.

#pragma once

#include <cstdint>

#include "randsat/cnf.hpp"
#include "randsat/rng.hpp"

namespace randsat {

// One clause: k i.i.d. literals, each uniform over the 2n possible literals.
Clause sample_clause_replace(uint32_t n, uint32_t k, RandomStream& rng);

// m i.i.d. clauses from sample_clause_replace.
Formula sample_formula_fixed_m(uint32_t n, uint32_t k, uint64_t m,
                               RandomStream& rng);

// Clause count at the threshold density: Poisson with mean
// threshold_density(k) * n, sampled exactly.
uint64_t sample_m_at_threshold(uint32_t n, uint32_t k, RandomStream& rng);

// Uniform over clauses satisfied by `planted`. Rejection: for any fixed
// variable tuple exactly one polarity pattern is falsified by `planted`, so
// each rejection round discards probability 2^-k uniformly.
Clause sample_planted_clause(const Assignment& planted, uint32_t k,
                             RandomStream& rng);

// Uniform over clauses all of whose literals are false under `anchor`:
// each slot gets an independent uniform variable with the polarity forced
// to disagree with `anchor`.
Clause sample_falsified_clause(const Assignment& anchor, uint32_t k,
                               RandomStream& rng);

// m i.i.d. clauses from sample_planted_clause. Every clause, hence the
// formula, is satisfied by `planted`.
Formula sample_planted_formula(const Assignment& planted, uint64_t m,
                               uint32_t k, RandomStream& rng);

// Uniform assignment over n variables.
Assignment sample_assignment_uniform(uint32_t n, RandomStream& rng);

// In-place variant for hot loops; reuses a's storage. a must have size n.
void sample_assignment_uniform_into(Assignment& a, RandomStream& rng);

// Uniform over assignments at Hamming distance exactly d from `center`
// (uniform d-subset of variables flipped). Requires d <= n.
Assignment sample_in_ball_exact(const Assignment& center, uint32_t d,
                                RandomStream& rng);

}  // namespace randsat
