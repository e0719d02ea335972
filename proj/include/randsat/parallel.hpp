// Deterministic work splitting. Ranges are cut into a block grid that
// depends only on the range size, never on the worker count; per-block
// results are combined in block order. Any associative combine therefore
// produces bit-identical results for every worker count, including
// floating-point accumulations.

#pragma once

#include <atomic>
#include <cstdint>
#include <thread>
#include <vector>

namespace randsat {

inline uint64_t block_count_for(uint64_t size) {
    const uint64_t kMaxBlocks = 1024;
    const uint64_t kMinBlock = 1024;
    if (size == 0) return 0;
    uint64_t blocks = (size + kMinBlock - 1) / kMinBlock;
    return blocks < kMaxBlocks ? blocks : kMaxBlocks;
}

// Applies map(lo, hi, block_index) to each block of [0, size) and
// combine(acc, block_result) over block results in ascending block order.
template <typename Result, typename Map, typename Combine>
Result block_map_reduce(uint64_t size, unsigned workers, Result init, Map map,
                        Combine combine) {
    uint64_t blocks = block_count_for(size);
    if (blocks == 0) return init;
    if (workers <= 1 || blocks == 1) {
        Result acc = std::move(init);
        for (uint64_t b = 0; b < blocks; ++b) {
            uint64_t lo = size * b / blocks;
            uint64_t hi = size * (b + 1) / blocks;
            combine(acc, map(lo, hi, b));
        }
        return acc;
    }

    std::vector<Result> partial(blocks);
    std::atomic<uint64_t> next{0};
    auto worker = [&] {
        for (;;) {
            uint64_t b = next.fetch_add(1);
            if (b >= blocks) return;
            uint64_t lo = size * b / blocks;
            uint64_t hi = size * (b + 1) / blocks;
            partial[b] = map(lo, hi, b);
        }
    };
    unsigned nthreads = workers < blocks ? workers : static_cast<unsigned>(blocks);
    std::vector<std::thread> pool;
    pool.reserve(nthreads);
    for (unsigned t = 0; t < nthreads; ++t) pool.emplace_back(worker);
    for (auto& t : pool) t.join();

    Result acc = std::move(init);
    for (uint64_t b = 0; b < blocks; ++b) combine(acc, std::move(partial[b]));
    return acc;
}

}  // namespace randsat
