#pragma once

#include <atomic>
#include <cstddef>
#include <functional>
#include <thread>
#include <vector>

namespace loglap {

// Runs fn(chunk_index, row_begin, row_end) over a fixed partition of [0, n)
// into kRowChunks contiguous blocks. The partition does not depend on the
// worker count, so per-chunk results reduced in chunk order are bitwise
// reproducible on any machine.
inline constexpr std::size_t kRowChunks = 16;

inline void parallel_row_chunks(std::size_t n,
                                const std::function<void(std::size_t, std::size_t,
                                                         std::size_t)>& fn) {
    if (n == 0) return;
    std::size_t chunks = std::min(kRowChunks, n);
    auto bound = [&](std::size_t c) { return (n * c) / chunks; };
    unsigned workers = std::min<unsigned>(std::thread::hardware_concurrency(),
                                          static_cast<unsigned>(chunks));
    if (workers <= 1) {
        for (std::size_t c = 0; c < chunks; ++c) fn(c, bound(c), bound(c + 1));
        return;
    }
    std::atomic<std::size_t> next{0};
    std::vector<std::thread> pool;
    pool.reserve(workers);
    for (unsigned t = 0; t < workers; ++t) {
        pool.emplace_back([&]() {
            for (std::size_t c = next.fetch_add(1); c < chunks; c = next.fetch_add(1))
                fn(c, bound(c), bound(c + 1));
        });
    }
    for (std::thread& th : pool) th.join();
}

}  // namespace loglap
