#pragma once

#include <algorithm>
#include <cstdlib>
#include <exception>
#include <functional>
#include <thread>
#include <vector>

namespace clr {

// Thread count from CRYSTAL_LR_THREADS, else the given default (0 = hardware).
inline int resolve_threads(int requested) {
    if (const char* env = std::getenv("CRYSTAL_LR_THREADS")) {
        int v = std::atoi(env);
        if (v > 0) return v;
    }
    if (requested > 0) return requested;
    unsigned hw = std::thread::hardware_concurrency();
    return hw ? static_cast<int>(hw) : 1;
}

// Calls body(i) for i in [0, n) on up to `threads` workers, striding by worker.
inline void parallel_for(std::size_t n, int threads, const std::function<void(std::size_t)>& body) {
    const int t = std::max(1, std::min<int>(threads, static_cast<int>(n)));
    if (t <= 1) {
        for (std::size_t i = 0; i < n; ++i) body(i);
        return;
    }
    std::vector<std::thread> pool;
    std::vector<std::exception_ptr> errors(t);
    for (int w = 0; w < t; ++w)
        pool.emplace_back([&, w] {
            try {
                for (std::size_t i = w; i < n; i += t) body(i);
            } catch (...) {
                errors[w] = std::current_exception();
            }
        });
    for (auto& th : pool) th.join();
    for (auto& e : errors)
        if (e) std::rethrow_exception(e);
}

}  // namespace clr
