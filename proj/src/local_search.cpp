#include "randsat/local_search.hpp"

#include <stdexcept>

#include "randsat/brute_force.hpp"
#include "randsat/sampling.hpp"

namespace randsat {

namespace {

bool branch_search(const Formula& f, Assignment& a, uint32_t radius,
                   SearchStats& stats) {
    ++stats.nodes;
    auto unsat = first_unsat_clause(f, a, &stats.clause_evals);
    if (!unsat) return true;
    if (radius == 0) return false;
    ClauseView c = f.clause(*unsat);
    for (Lit l : c) {
        a.flip(l.var());
        if (branch_search(f, a, radius - 1, stats)) return true;
        a.flip(l.var());
    }
    return false;
}

}  // namespace

std::optional<Assignment> sat_from_small_hd(const Formula& f,
                                            const Assignment& start,
                                            uint32_t radius,
                                            SearchStats* stats) {
    SearchStats local;
    SearchStats& s = stats ? *stats : local;
    Assignment a = start;
    if (branch_search(f, a, radius, s)) return a;
    return std::nullopt;
}

std::optional<Assignment> exhaustive_ball_search(const Formula& f,
                                                 const Assignment& center,
                                                 uint32_t radius,
                                                 SearchStats* stats) {
    uint32_t n = center.size();
    if (radius > n)
        throw std::invalid_argument("exhaustive_ball_search: radius > n");
    SearchStats local;
    SearchStats& s = stats ? *stats : local;

    auto next_comb = [n](std::vector<uint32_t>& comb) -> bool {
        uint32_t d = static_cast<uint32_t>(comb.size());
        for (uint32_t i = d; i-- > 0;) {
            if (comb[i] < n - d + i) {
                ++comb[i];
                for (uint32_t j = i + 1; j < d; ++j) comb[j] = comb[j - 1] + 1;
                return true;
            }
        }
        return false;
    };

    Assignment a = center;
    for (uint32_t d = 0; d <= radius; ++d) {
        // Flip sets of size d in lexicographic order over variable indices.
        std::vector<uint32_t> comb(d);
        for (uint32_t i = 0; i < d; ++i) comb[i] = i;
        do {
            a = center;
            for (uint32_t v : comb) a.flip(v);
            ++s.nodes;
            if (!first_unsat_clause(f, a, &s.clause_evals)) return a;
        } while (d > 0 && next_comb(comb));
    }
    return std::nullopt;
}

SmallKResult solve_small_k(const Formula& f, RandomStream& rng,
                           const SmallKOptions& opts) {
    SmallKResult res;
    uint32_t n = f.num_vars();
    uint32_t k = f.width();
    uint32_t radius =
        static_cast<uint32_t>((static_cast<uint64_t>(n) + k) / (k + 1));

    for (uint64_t r = 0; r < opts.max_restarts; ++r) {
        Assignment start = sample_assignment_uniform(n, rng);
        auto found = sat_from_small_hd(f, start, radius, &res.stats);
        res.restarts_used = r + 1;
        if (found) {
            if (!satisfies(f, *found))
                throw std::logic_error("solve_small_k: unsound result");
            res.status = SmallKStatus::Satisfiable;
            res.assignment = std::move(found);
            return res;
        }
    }

    if (n <= opts.brute_force_max_n) {
        res.brute_forced = true;
        auto found = brute_force_solve(f, opts.brute_force_max_n);
        if (found) {
            if (!satisfies(f, *found))
                throw std::logic_error("solve_small_k: unsound result");
            res.status = SmallKStatus::Satisfiable;
            res.assignment = std::move(found);
        } else {
            res.status = SmallKStatus::Unsatisfiable;
        }
        return res;
    }

    res.status = SmallKStatus::Inconclusive;
    return res;
}

}  // namespace randsat
