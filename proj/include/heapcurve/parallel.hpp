#pragma once

#include <algorithm>
#include <cstdint>
#include <cstdlib>
#include <string>
#include <thread>
#include <vector>

namespace heapcurve {

/// Number of worker threads to use for internal scans. Capped by the
/// HEAPCURVE_THREADS environment variable; defaults to machine parallelism.
inline unsigned thread_budget() {
    unsigned hw = std::max(1u, std::thread::hardware_concurrency());
    if (const char* env = std::getenv("HEAPCURVE_THREADS")) {
        char* end = nullptr;
        long requested = std::strtol(env, &end, 10);
        if (end != env && requested >= 1) {
            hw = std::min<long>(hw, requested);
        }
    }
    return hw;
}

/// Splits [0, total) into contiguous chunks, one per worker, and runs
/// fn(begin, end, worker_index) on each. Workers must not share mutable
/// state; callers merge per-worker results afterwards.
template <typename Fn>
void parallel_chunks(std::uint64_t total, Fn&& fn) {
    unsigned workers = thread_budget();
    if (total < 200000 || workers <= 1) {
        fn(std::uint64_t{0}, total, 0u);
        return;
    }
    const std::uint64_t chunk = (total + workers - 1) / workers;
    std::vector<std::thread> pool;
    pool.reserve(workers);
    for (unsigned w = 0; w < workers; ++w) {
        const std::uint64_t begin = std::min<std::uint64_t>(total, w * chunk);
        const std::uint64_t end = std::min<std::uint64_t>(total, begin + chunk);
        if (begin >= end) break;
        pool.emplace_back([&fn, begin, end, w] { fn(begin, end, w); });
    }
    for (auto& t : pool) t.join();
}

}  // namespace heapcurve
