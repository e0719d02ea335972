#include "randsat/threshold.hpp"

#include <cmath>
#include <stdexcept>

namespace randsat {

double threshold_density(uint32_t k) {
    if (k < 1) throw std::invalid_argument("threshold_density requires k >= 1");
    if (k > 1000) throw std::overflow_error("threshold_density: k too large");
    return std::exp2(static_cast<double>(k)) * M_LN2 - (1.0 + M_LN2) / 2.0;
}

ThresholdModel ThresholdModel::make(uint32_t k, uint32_t k_star) {
    ThresholdModel t;
    t.k = k;
    t.k_star = k_star;
    t.density = threshold_density(k);
    return t;
}

}  // namespace randsat
