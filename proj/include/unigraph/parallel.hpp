#pragma once

// Batch parallelism helper. UNIGRAPH_THREADS caps the worker count; tasks
// write into preallocated slots so results stay deterministic.

#include <atomic>
#include <cstdlib>
#include <string>
#include <thread>
#include <vector>

namespace unigraph {

inline int max_threads() {
    int hw = static_cast<int>(std::thread::hardware_concurrency());
    if (hw < 1) hw = 1;
    if (const char* env = std::getenv("UNIGRAPH_THREADS")) {
        int cap = std::atoi(env);
        if (cap >= 1 && cap < hw) hw = cap;
    }
    return hw;
}

template <typename Fn>
void parallel_for(int count, Fn&& fn) {
    int workers = std::min(max_threads(), count);
    if (workers <= 1) {
        for (int i = 0; i < count; ++i) fn(i);
        return;
    }
    std::vector<std::thread> pool;
    pool.reserve(workers);
    std::atomic<int> next{0};
    for (int w = 0; w < workers; ++w)
        pool.emplace_back([&] {
            for (int i = next.fetch_add(1); i < count; i = next.fetch_add(1)) fn(i);
        });
    for (auto& th : pool) th.join();
}

}  // namespace unigraph
