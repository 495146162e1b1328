// Deterministic fan-out over an outer index range.
#pragma once

#include <algorithm>
#include <atomic>
#include <cstdlib>
#include <functional>
#include <optional>
#include <string>
#include <thread>
#include <vector>

namespace trm {

// Worker count from TRACT_MATROIDS_JOBS, defaulting to 1.
inline unsigned default_jobs() {
    if (const char* s = std::getenv("TRACT_MATROIDS_JOBS")) {
        int n = std::atoi(s);
        if (n > 0) return static_cast<unsigned>(n);
    }
    return 1;
}

// Runs body(i) for i in [0, n) and returns every non-empty result in index
// order. With stop_at_first, indices beyond the smallest hit may be skipped.
template <class R>
std::vector<std::pair<std::size_t, R>> parallel_collect(std::size_t n, unsigned jobs,
                                                        const std::function<std::optional<R>(std::size_t)>& body,
                                                        bool stop_at_first) {
    std::vector<std::optional<R>> slot(n);
    std::atomic<std::size_t> first{n};
    auto work = [&](unsigned w, unsigned stride) {
        for (std::size_t i = w; i < n; i += stride) {
            if (stop_at_first && i > first.load(std::memory_order_relaxed)) break;
            slot[i] = body(i);
            if (slot[i] && stop_at_first) {
                std::size_t cur = first.load();
                while (i < cur && !first.compare_exchange_weak(cur, i)) {
                }
            }
        }
    };
    jobs = std::max(1u, std::min<unsigned>(jobs, static_cast<unsigned>(std::max<std::size_t>(n, 1))));
    if (jobs == 1) {
        work(0, 1);
    } else {
        std::vector<std::thread> pool;
        for (unsigned w = 0; w < jobs; ++w) pool.emplace_back(work, w, jobs);
        for (auto& th : pool) th.join();
    }
    std::vector<std::pair<std::size_t, R>> out;
    for (std::size_t i = 0; i < n; ++i)
        if (slot[i]) {
            out.emplace_back(i, std::move(*slot[i]));
            if (stop_at_first) break;
        }
    return out;
}

}  // namespace trm
