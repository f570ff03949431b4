#pragma once

#include <atomic>
#include <cstddef>
#include <functional>
#include <thread>
#include <vector>

namespace fictus {

inline unsigned effective_threads(unsigned requested) {
    if (requested > 0) return requested;
    unsigned hw = std::thread::hardware_concurrency();
    return hw > 0 ? hw : 1;
}

// Runs fn(i) for i in [0, n).  Work is handed out in chunks through an
// atomic counter; every unit derives its own randomness from its index,
// so the schedule cannot influence results.
inline void parallel_for(size_t n, unsigned threads, const std::function<void(size_t)>& fn) {
    threads = effective_threads(threads);
    if (threads <= 1 || n <= 1) {
        for (size_t i = 0; i < n; ++i) fn(i);
        return;
    }
    std::atomic<size_t> cursor{0};
    size_t chunk = n / (threads * 8) + 1;
    auto worker = [&] {
        while (true) {
            size_t start = cursor.fetch_add(chunk);
            if (start >= n) return;
            size_t end = start + chunk < n ? start + chunk : n;
            for (size_t i = start; i < end; ++i) fn(i);
        }
    };
    std::vector<std::thread> pool;
    pool.reserve(threads);
    for (unsigned t = 0; t < threads; ++t) pool.emplace_back(worker);
    for (auto& t : pool) t.join();
}

}  // namespace fictus
