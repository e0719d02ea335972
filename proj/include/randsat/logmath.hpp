// Numeric helpers for combinatorial quantities that overflow naive doubles:
// exact binomial coefficients where they fit, log-domain fallbacks, and
// compensated summation.

#pragma once

#include <cstdint>
#include <vector>

namespace randsat {

// C(n, r) as an exact 128-bit integer. Throws std::overflow_error if the
// value does not fit. Exact for all n <= 128 and far beyond for small r.
unsigned __int128 binomial_u128(uint32_t n, uint32_t r);

// C(n, r) rounded to long double (exact while the value fits in the
// 64-bit significand, i.e. for all n <= 67).
long double binomial_ld(uint32_t n, uint32_t r);

// log2 C(n, r) via lgamma; usable at any scale.
double log2_binomial(uint32_t n, uint32_t r);

// base^exp as a 128-bit integer; throws std::overflow_error on overflow.
unsigned __int128 ipow_u128(uint64_t base, uint32_t exp);

// Kahan compensated accumulator.
class KahanSum {
  public:
    void add(long double x) {
        long double y = x - c_;
        long double t = s_ + y;
        c_ = (t - s_) - y;
        s_ = t;
    }
    long double value() const { return s_; }

  private:
    long double s_ = 0.0L;
    long double c_ = 0.0L;
};

// Ceiling of a/b for positive 128-bit integers.
inline unsigned __int128 ceil_div_u128(unsigned __int128 a,
                                       unsigned __int128 b) {
    return (a + b - 1) / b;
}

}  // namespace randsat
