#pragma once

#include <cstdlib>
#include <functional>
#include <thread>
#include <vector>

namespace projinv {

/// Parallelism cap: PROJINV_THREADS if set, otherwise hardware concurrency.
inline unsigned thread_cap() {
    unsigned hw = std::thread::hardware_concurrency();
    if (hw == 0) hw = 1;
    if (const char* env = std::getenv("PROJINV_THREADS")) {
        const long v = std::strtol(env, nullptr, 10);
        if (v >= 1 && static_cast<unsigned>(v) < hw) hw = static_cast<unsigned>(v);
    }
    return hw;
}

/// Runs fn(i) for i in [0, count). Results must be written into preallocated
/// slots indexed by i; any subsequent reduction happens in index order, so the
/// outcome is identical whether this runs on one thread or many.
inline void for_each_index(std::size_t count, const std::function<void(std::size_t)>& fn) {
    const unsigned threads = count < 2 ? 1 : std::min<unsigned>(thread_cap(), static_cast<unsigned>(count));
    if (threads <= 1) {
        for (std::size_t i = 0; i < count; ++i) fn(i);
        return;
    }
    std::vector<std::thread> pool;
    pool.reserve(threads);
    for (unsigned t = 0; t < threads; ++t) {
        pool.emplace_back([&, t] {
            for (std::size_t i = t; i < count; i += threads) fn(i);
        });
    }
    for (auto& th : pool) th.join();
}

}  // namespace projinv
