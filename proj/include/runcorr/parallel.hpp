#pragma once

#include <algorithm>
#include <atomic>
#include <cstdint>
#include <cstdlib>
#include <string>
#include <thread>
#include <vector>

namespace runcorr {

/// Worker count from RUNCORR_THREADS, falling back to the hardware count.
inline unsigned workers_from_env() {
    if (const char* env = std::getenv("RUNCORR_THREADS")) {
        try {
            const long v = std::stol(env);
            if (v > 0) return static_cast<unsigned>(std::min<long>(v, 1024));
        } catch (...) {
        }
    }
    return std::max(1u, std::thread::hardware_concurrency());
}

namespace detail {

inline constexpr std::uint64_t default_chunk = std::uint64_t{1} << 14;

/// Splits [0, total) into fixed-size chunks and calls `fn(begin, end, out)`
/// for each, collecting per-chunk outputs in chunk order. The chunk layout
/// depends only on `total`, so the merged result is independent of `workers`.
template <class T, class Fn>
std::vector<T> chunked_collect(std::uint64_t total, unsigned workers, std::uint64_t chunk, Fn fn) {
    const std::uint64_t chunks = (total + chunk - 1) / chunk;
    std::vector<std::vector<T>> parts(chunks);
    std::atomic<std::uint64_t> next{0};
    auto work = [&] {
        for (std::uint64_t c = next++; c < chunks; c = next++) {
            const std::uint64_t begin = c * chunk;
            fn(begin, std::min(total, begin + chunk), parts[c]);
        }
    };
    if (workers == 0) workers = std::max(1u, std::thread::hardware_concurrency());
    workers = static_cast<unsigned>(std::min<std::uint64_t>(workers, std::max<std::uint64_t>(chunks, 1)));
    if (workers <= 1) {
        work();
    } else {
        std::vector<std::thread> pool;
        pool.reserve(workers);
        for (unsigned w = 0; w < workers; ++w) pool.emplace_back(work);
        for (auto& th : pool) th.join();
    }
    std::vector<T> merged;
    for (auto& p : parts) merged.insert(merged.end(), p.begin(), p.end());
    return merged;
}

}  // namespace detail

}  // namespace runcorr
