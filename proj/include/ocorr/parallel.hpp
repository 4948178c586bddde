#ifndef OCORR_PARALLEL_HPP
#define OCORR_PARALLEL_HPP

#include <atomic>
#include <functional>
#include <thread>
#include <vector>

namespace ocorr {

inline int hardware_threads() {
    unsigned n = std::thread::hardware_concurrency();
    return n == 0 ? 1 : (int)n;
}

/// Runs fn(index) for index in [0, total) on `threads` workers, pulling
/// indices from a shared counter. Results must be written to
/// index-addressed slots so the outcome is schedule-independent.
inline void parallel_for(long total, int threads, const std::function<void(long)>& fn) {
    if (threads <= 0) threads = hardware_threads();
    if (threads == 1 || total <= 1) {
        for (long i = 0; i < total; ++i) fn(i);
        return;
    }
    std::atomic<long> next{0};
    std::vector<std::thread> pool;
    pool.reserve(threads);
    for (int t = 0; t < threads; ++t) {
        pool.emplace_back([&]() {
            for (;;) {
                long i = next.fetch_add(1);
                if (i >= total) return;
                fn(i);
            }
        });
    }
    for (auto& th : pool) th.join();
}

}  // namespace ocorr

#endif
