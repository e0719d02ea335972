#include "randsat/brute_force.hpp"

#include <stdexcept>

#include "randsat/parallel.hpp"

namespace randsat {

namespace {

void check_scale(const Formula& f, uint32_t max_n) {
    if (f.num_vars() > max_n)
        throw std::invalid_argument("brute force limited to " +
                                    std::to_string(max_n) + " variables");
}

}  // namespace

std::optional<Assignment> brute_force_solve(const Formula& f, uint32_t max_n,
                                            unsigned workers) {
    check_scale(f, max_n);
    uint32_t n = f.num_vars();
    if (n == 0) {
        Assignment empty(0);
        if (satisfies(f, empty)) return empty;
        return std::nullopt;
    }
    uint64_t total = uint64_t{1} << n;

    const uint64_t kNone = ~uint64_t{0};
    auto map = [&](uint64_t lo, uint64_t hi, uint64_t) -> uint64_t {
        Assignment a(n);
        for (uint64_t idx = lo; idx < hi; ++idx) {
            a.words_mut()[0] = idx;
            if (satisfies(f, a)) return idx;
        }
        return kNone;
    };
    auto combine = [&](uint64_t& acc, uint64_t found) {
        if (acc == kNone) acc = found;
    };
    uint64_t winner = block_map_reduce<uint64_t>(total, workers, kNone, map, combine);
    if (winner == kNone) return std::nullopt;
    return Assignment::from_index(n, winner);
}

uint64_t count_satisfying(const Formula& f, uint32_t max_n, unsigned workers) {
    check_scale(f, max_n);
    uint32_t n = f.num_vars();
    if (n == 0) return satisfies(f, Assignment(0)) ? 1 : 0;
    uint64_t total = uint64_t{1} << n;

    auto map = [&](uint64_t lo, uint64_t hi, uint64_t) -> uint64_t {
        Assignment a(n);
        uint64_t count = 0;
        for (uint64_t idx = lo; idx < hi; ++idx) {
            a.words_mut()[0] = idx;
            if (satisfies(f, a)) ++count;
        }
        return count;
    };
    auto combine = [](uint64_t& acc, uint64_t c) { acc += c; };
    return block_map_reduce<uint64_t>(total, workers, uint64_t{0}, map, combine);
}

}  // namespace randsat
