#include "randsat/rng.hpp"

namespace randsat {

namespace {

// SplitMix64 finalizer; decorrelates nearby (seed, stream) pairs before the
// engine expands the single word into its full state.
uint64_t mix64(uint64_t z) {
    z = (z ^ (z >> 30)) * 0xBF58476D1CE4E5B9ULL;
    z = (z ^ (z >> 27)) * 0x94D049BB133111EBULL;
    return z ^ (z >> 31);
}

}  // namespace

RandomStream::RandomStream(uint64_t seed, uint64_t stream_id)
    : seed_(seed), stream_id_(stream_id) {
    uint64_t x = seed + 0x9E3779B97F4A7C15ULL;
    x = mix64(x);
    x = mix64(x ^ (stream_id + 0x9E3779B97F4A7C15ULL));
    engine_.seed(x);
}

}  // namespace randsat
