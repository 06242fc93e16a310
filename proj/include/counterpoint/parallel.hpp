#pragma once

// Minimal worker-pool helper for the exhaustive searches. All call sites
// operate on disjoint output slots, so no synchronization beyond join.

#include <algorithm>
#include <functional>
#include <thread>
#include <vector>

namespace counterpoint {

/// Runs fn(i) for i in [begin, end), partitioned across at most `jobs` threads.
/// jobs <= 1 runs inline.
inline void parallel_for(int begin, int end, int jobs, const std::function<void(int)>& fn) {
    const int count = end - begin;
    if (count <= 0) return;
    jobs = std::max(1, std::min(jobs, count));
    if (jobs == 1) {
        for (int i = begin; i < end; ++i) fn(i);
        return;
    }
    std::vector<std::thread> workers;
    workers.reserve(static_cast<std::size_t>(jobs));
    for (int w = 0; w < jobs; ++w)
        workers.emplace_back([&, w] {
            for (int i = begin + w; i < end; i += jobs) fn(i);
        });
    for (std::thread& t : workers) t.join();
}

}  // namespace counterpoint
