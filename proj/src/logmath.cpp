#include "randsat/logmath.hpp"

#include <cmath>
#include <limits>
#include <stdexcept>

namespace randsat {

unsigned __int128 binomial_u128(uint32_t n, uint32_t r) {
    if (r > n) return 0;
    if (r > n - r) r = n - r;
    unsigned __int128 c = 1;
    const unsigned __int128 limit = ~static_cast<unsigned __int128>(0);
    for (uint32_t i = 1; i <= r; ++i) {
        // c = c * (n - r + i) / i stays integral at every step.
        unsigned __int128 num = n - r + i;
        if (c > limit / num) throw std::overflow_error("binomial_u128");
        c = c * num / i;
    }
    return c;
}

long double binomial_ld(uint32_t n, uint32_t r) {
    if (r > n) return 0.0L;
    if (n <= 128) return static_cast<long double>(binomial_u128(n, r));
    return std::exp2(static_cast<long double>(log2_binomial(n, r)));
}

double log2_binomial(uint32_t n, uint32_t r) {
    if (r > n) return -std::numeric_limits<double>::infinity();
    static const double kLog2e = 1.4426950408889634074;
    return (std::lgamma(static_cast<double>(n) + 1) -
            std::lgamma(static_cast<double>(r) + 1) -
            std::lgamma(static_cast<double>(n - r) + 1)) *
           kLog2e;
}

unsigned __int128 ipow_u128(uint64_t base, uint32_t exp) {
    unsigned __int128 r = 1;
    unsigned __int128 b = base;
    const unsigned __int128 limit = ~static_cast<unsigned __int128>(0);
    while (exp > 0) {
        if (exp & 1u) {
            if (b != 0 && r > limit / b) throw std::overflow_error("ipow_u128");
            r *= b;
        }
        exp >>= 1;
        if (exp > 0) {
            if (b != 0 && b > limit / b) throw std::overflow_error("ipow_u128");
            b *= b;
        }
    }
    return r;
}

}  // namespace randsat
