#include "randsat/cnf.hpp"

#include <bit>
#include <stdexcept>

namespace randsat {

Assignment Assignment::from_index(uint32_t n, uint64_t index) {
    if (n > 64) throw std::invalid_argument("from_index requires n <= 64");
    Assignment a(n);
    if (n > 0) {
        uint64_t mask = (n == 64) ? ~uint64_t{0} : ((uint64_t{1} << n) - 1);
        a.words_[0] = index & mask;
    }
    return a;
}

Assignment Assignment::from_bits(const std::vector<bool>& bits) {
    Assignment a(static_cast<uint32_t>(bits.size()));
    for (uint32_t i = 0; i < bits.size(); ++i)
        if (bits[i]) a.set(i, true);
    return a;
}

Assignment Assignment::from_string(const std::string& s) {
    Assignment a(static_cast<uint32_t>(s.size()));
    for (uint32_t i = 0; i < s.size(); ++i) {
        if (s[i] == '1')
            a.set(i, true);
        else if (s[i] != '0')
            throw std::invalid_argument("assignment string must be 0/1");
    }
    return a;
}

Assignment Assignment::complement() const {
    Assignment a(n_);
    for (size_t w = 0; w < words_.size(); ++w) a.words_[w] = ~words_[w];
    // Re-establish the zero-tail invariant.
    if (n_ % 64 != 0 && !a.words_.empty())
        a.words_.back() &= (uint64_t{1} << (n_ % 64)) - 1;
    return a;
}

uint64_t Assignment::to_index() const {
    if (n_ > 64) throw std::invalid_argument("to_index requires n <= 64");
    return words_.empty() ? 0 : words_[0];
}

std::string Assignment::to_string() const {
    std::string s(n_, '0');
    for (uint32_t i = 0; i < n_; ++i)
        if (get(i)) s[i] = '1';
    return s;
}

uint32_t hamming_distance(const Assignment& a, const Assignment& b) {
    if (a.size() != b.size())
        throw std::invalid_argument("hamming_distance: size mismatch");
    uint32_t d = 0;
    const auto& wa = a.words();
    const auto& wb = b.words();
    for (size_t i = 0; i < wa.size(); ++i)
        d += static_cast<uint32_t>(std::popcount(wa[i] ^ wb[i]));
    return d;
}

Formula Formula::strict(uint32_t n, uint32_t k,
                        const std::vector<Clause>& clauses) {
    Formula f(n, k);
    for (const auto& c : clauses) f.add_clause(c);
    return f;
}

Formula Formula::tolerant(uint32_t n, const std::vector<Clause>& clauses) {
    Formula f(n, 0);
    for (const auto& c : clauses) {
        if (c.size() > f.k_) f.k_ = static_cast<uint32_t>(c.size());
        f.append_unchecked(c);
    }
    f.uniform_ = true;
    for (const auto& c : clauses)
        if (c.size() != f.k_) f.uniform_ = false;
    return f;
}

void Formula::add_clause(ClauseView c) {
    if (c.size() != k_)
        throw std::invalid_argument("clause width does not match formula width");
    append_unchecked(c);
}

void Formula::append_unchecked(ClauseView c) {
    for (Lit l : c)
        if (l.var() >= n_)
            throw std::out_of_range("literal variable out of range");
    lits_.insert(lits_.end(), c.begin(), c.end());
    offsets_.push_back(static_cast<uint32_t>(lits_.size()));
}

Clause Formula::clause_copy(size_t i) const {
    ClauseView v = clause(i);
    return Clause(v.begin(), v.end());
}

bool eval_clause(ClauseView c, const Assignment& a) {
    for (Lit l : c) {
        if (l.var() >= a.size())
            throw std::out_of_range("literal variable out of range");
        if (a.get(l.var()) != l.negated()) return true;
    }
    return false;
}

namespace {

// Range checks were done at construction; this is the hot path.
inline bool eval_clause_unchecked(ClauseView c, const Assignment& a) {
    for (Lit l : c)
        if (a.get(l.var()) != l.negated()) return true;
    return false;
}

inline void check_sizes(const Formula& f, const Assignment& a) {
    if (a.size() != f.num_vars())
        throw std::invalid_argument("assignment size does not match formula");
}

}  // namespace

uint64_t num_clauses_sat(const Formula& f, const Assignment& a) {
    check_sizes(f, a);
    uint64_t c = 0;
    for (size_t i = 0, m = f.num_clauses(); i < m; ++i)
        c += eval_clause_unchecked(f.clause(i), a) ? 1 : 0;
    return c;
}

uint64_t num_clauses_unsat(const Formula& f, const Assignment& a) {
    return f.num_clauses() - num_clauses_sat(f, a);
}

bool satisfies(const Formula& f, const Assignment& a) {
    check_sizes(f, a);
    for (size_t i = 0, m = f.num_clauses(); i < m; ++i)
        if (!eval_clause_unchecked(f.clause(i), a)) return false;
    return true;
}

std::optional<size_t> first_unsat_clause(const Formula& f, const Assignment& a,
                                         uint64_t* evals) {
    check_sizes(f, a);
    for (size_t i = 0, m = f.num_clauses(); i < m; ++i) {
        if (evals) ++*evals;
        if (!eval_clause_unchecked(f.clause(i), a)) return i;
    }
    return std::nullopt;
}

}  // namespace randsat
