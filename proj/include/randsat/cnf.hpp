// Core CNF types: literals, clauses, formulas and bit-packed assignments.
//
// Variables are 0-indexed internally. Clauses keep their literals exactly as
// given: duplicate literals and complementary pairs are legal and are never
// simplified away, so clause counts stay faithful to the generating process.

#pragma once

#include <cstdint>
#include <optional>
#include <span>
#include <string>
#include <vector>

namespace randsat {

// One literal, packed as (variable << 1) | negated.
struct Lit {
    uint32_t code = 0;

    static Lit make(uint32_t var, bool negated) {
        return Lit{(var << 1) | (negated ? 1u : 0u)};
    }
    uint32_t var() const { return code >> 1; }
    bool negated() const { return (code & 1u) != 0; }

    friend bool operator==(Lit a, Lit b) { return a.code == b.code; }
    friend auto operator<=>(Lit a, Lit b) { return a.code <=> b.code; }
};

// A clause is an ordered sequence of literals; order and multiplicity matter
// only for identity (evaluation is order-insensitive).
using Clause = std::vector<Lit>;
using ClauseView = std::span<const Lit>;

// Truth assignment over n variables, one bit per variable.
// Invariant: bits at positions >= n in the last word are zero, so whole-word
// comparison and popcount are valid.
class Assignment {
  public:
    Assignment() = default;
    explicit Assignment(uint32_t n) : n_(n), words_((n + 63) / 64, 0) {}

    // Bits of `index` become variable values; requires n <= 64.
    static Assignment from_index(uint32_t n, uint64_t index);
    static Assignment from_bits(const std::vector<bool>& bits);
    // Parses a string of '0'/'1' characters, variable 0 first.
    static Assignment from_string(const std::string& s);

    uint32_t size() const { return n_; }

    bool get(uint32_t var) const {
        return (words_[var >> 6] >> (var & 63)) & 1u;
    }
    void set(uint32_t var, bool value) {
        uint64_t mask = uint64_t{1} << (var & 63);
        if (value)
            words_[var >> 6] |= mask;
        else
            words_[var >> 6] &= ~mask;
    }
    void flip(uint32_t var) { words_[var >> 6] ^= uint64_t{1} << (var & 63); }

    Assignment complement() const;
    uint64_t to_index() const;  // requires n <= 64
    std::string to_string() const;

    const std::vector<uint64_t>& words() const { return words_; }
    std::vector<uint64_t>& words_mut() { return words_; }

    friend bool operator==(const Assignment& a, const Assignment& b) {
        return a.n_ == b.n_ && a.words_ == b.words_;
    }

  private:
    uint32_t n_ = 0;
    std::vector<uint64_t> words_;
};

// Number of positions where a and b disagree. Throws if sizes differ.
uint32_t hamming_distance(const Assignment& a, const Assignment& b);

// CNF formula over n variables with nominal clause width k.
// Clauses are stored flat; construction validates variable ranges and, for
// width-checked formulas, that every clause has exactly k literals.
class Formula {
  public:
    Formula() = default;
    Formula(uint32_t n, uint32_t k) : n_(n), k_(k) {}

    // Width-checked construction: every clause must have exactly k literals.
    static Formula strict(uint32_t n, uint32_t k,
                          const std::vector<Clause>& clauses);
    // Accepts mixed widths; k becomes the maximum clause width present.
    static Formula tolerant(uint32_t n, const std::vector<Clause>& clauses);

    // Appends one clause, enforcing width k and variable range.
    void add_clause(ClauseView c);

    uint32_t num_vars() const { return n_; }
    uint32_t width() const { return k_; }
    size_t num_clauses() const { return offsets_.size() - 1; }
    bool uniform_width() const { return uniform_; }

    ClauseView clause(size_t i) const {
        return ClauseView(lits_.data() + offsets_[i],
                          offsets_[i + 1] - offsets_[i]);
    }
    Clause clause_copy(size_t i) const;

    friend bool operator==(const Formula& a, const Formula& b) {
        return a.n_ == b.n_ && a.k_ == b.k_ && a.lits_ == b.lits_ &&
               a.offsets_ == b.offsets_;
    }

  private:
    void append_unchecked(ClauseView c);

    uint32_t n_ = 0;
    uint32_t k_ = 0;
    bool uniform_ = true;
    std::vector<Lit> lits_;
    std::vector<uint32_t> offsets_{0};
};

// True iff at least one literal of c is true under a. Short-circuits on the
// first true literal. Throws if a literal's variable is out of range for a.
bool eval_clause(ClauseView c, const Assignment& a);

// Clause counts under a. Both require a.size() == f.num_vars().
uint64_t num_clauses_sat(const Formula& f, const Assignment& a);
uint64_t num_clauses_unsat(const Formula& f, const Assignment& a);

// True iff every clause of f is satisfied by a.
bool satisfies(const Formula& f, const Assignment& a);

// Index of the lowest-indexed clause falsified by a, if any. `evals`, when
// given, is incremented by the number of clauses examined.
std::optional<size_t> first_unsat_clause(const Formula& f, const Assignment& a,
                                         uint64_t* evals = nullptr);

}  // namespace randsat
