#pragma once

#include <algorithm>
#include <cstdlib>
#include <string>
#include <thread>
#include <vector>

namespace qdilog {

// Worker count: QDILOG_THREADS if set, else the hardware concurrency.
inline int worker_count() {
    int hw = static_cast<int>(std::max(1u, std::thread::hardware_concurrency()));
    if (const char* env = std::getenv("QDILOG_THREADS")) {
        int cap = std::atoi(env);
        if (cap >= 1) return std::min(cap, hw * 4);
    }
    return hw;
}

// Runs fn(i) for i in [0, n) on contiguous blocks.  fn must only touch state
// owned by index i.
template <class F>
void parallel_for(size_t n, F&& fn) {
    size_t workers = std::min<size_t>(static_cast<size_t>(worker_count()), n);
    if (workers <= 1 || n < 64) {
        for (size_t i = 0; i < n; ++i) fn(i);
        return;
    }
    std::vector<std::thread> pool;
    size_t block = (n + workers - 1) / workers;
    for (size_t w = 0; w < workers; ++w) {
        size_t b = w * block, e = std::min(n, b + block);
        if (b >= e) break;
        pool.emplace_back([&fn, b, e] {
            for (size_t i = b; i < e; ++i) fn(i);
        });
    }
    for (auto& t : pool) t.join();
}

}  // namespace qdilog
