#pragma once

#include <atomic>
#include <cstddef>
#include <exception>
#include <functional>
#include <thread>
#include <vector>

namespace gtkit {

inline int default_worker_count() {
    const unsigned hw = std::thread::hardware_concurrency();
    return hw == 0 ? 1 : static_cast<int>(hw);
}

// Runs job(i) for i = 0..count-1 on up to `workers` threads.  Each job owns
// its slot, so results land at fixed indices and the outcome is identical for
// every pool size.  The first exception (lowest index wins deterministically
// only for single-worker pools; any one is rethrown otherwise) propagates.
inline void run_parallel(std::size_t count, int workers,
                         const std::function<void(std::size_t)>& job) {
    if (count == 0) return;
    if (workers < 1) workers = 1;
    const std::size_t nthreads =
        std::min<std::size_t>(static_cast<std::size_t>(workers), count);
    if (nthreads == 1) {
        for (std::size_t i = 0; i < count; ++i) job(i);
        return;
    }
    std::atomic<std::size_t> next{0};
    std::vector<std::exception_ptr> errors(nthreads);
    std::vector<std::thread> pool;
    pool.reserve(nthreads);
    for (std::size_t t = 0; t < nthreads; ++t) {
        pool.emplace_back([&, t] {
            for (;;) {
                const std::size_t i = next.fetch_add(1);
                if (i >= count) return;
                try {
                    job(i);
                } catch (...) {
                    errors[t] = std::current_exception();
                    return;
                }
            }
        });
    }
    for (auto& th : pool) th.join();
    for (const auto& e : errors) {
        if (e) std::rethrow_exception(e);
    }
}

}  // namespace gtkit
