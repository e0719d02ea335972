// Seeded random streams. A stream is identified by (seed, stream id); the
// same pair always yields the same draw sequence. Derived streams make
// per-index draws reproducible regardless of how work is split across
// threads: index i uses stream id (base id XOR i).

#pragma once

#include <cstdint>
#include <random>

namespace randsat {

class RandomStream {
  public:
    using result_type = uint64_t;

    explicit RandomStream(uint64_t seed, uint64_t stream_id = 0);

    static constexpr result_type min() { return 0; }
    static constexpr result_type max() { return ~uint64_t{0}; }
    result_type operator()() { return engine_(); }

    uint64_t seed() const { return seed_; }
    uint64_t stream_id() const { return stream_id_; }

    // Stream for sample index i under this stream's base id.
    RandomStream substream(uint64_t index) const {
        return RandomStream(seed_, stream_id_ ^ index);
    }

    uint64_t next_u64() { return engine_(); }

    // Uniform integer in [0, bound), unbiased. bound must be positive.
    uint32_t uniform_below(uint32_t bound) {
        return std::uniform_int_distribution<uint32_t>(0, bound - 1)(engine_);
    }

    // Uniform double in [0, 1) with 53 random bits.
    double uniform_double() { return (engine_() >> 11) * 0x1.0p-53; }

    bool coin() { return (engine_() & 1u) != 0; }

    std::mt19937_64& engine() { return engine_; }

  private:
    uint64_t seed_;
    uint64_t stream_id_;
    std::mt19937_64 engine_;
};

}  // namespace randsat
