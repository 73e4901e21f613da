#pragma once

#include <algorithm>
#include <atomic>
#include <cstddef>
#include <exception>
#include <mutex>
#include <thread>
#include <vector>

namespace monideal {

// Run fn(i) for every i in [0, count) on up to `threads` workers (0 means
// hardware concurrency).  Indices are claimed atomically; the first
// exception is rethrown on the calling thread after all workers stop.
template <typename Fn>
void parallel_for_indices(std::size_t count, unsigned threads, Fn&& fn) {
    if (count == 0)
        return;
    unsigned want = threads ? threads : std::thread::hardware_concurrency();
    if (want <= 1 || count == 1) {
        for (std::size_t i = 0; i < count; ++i)
            fn(i);
        return;
    }
    unsigned workers =
        static_cast<unsigned>(std::min<std::size_t>(want, count));
    std::atomic<std::size_t> next{0};
    std::mutex err_mu;
    std::exception_ptr err;
    auto run = [&]() {
        for (;;) {
            std::size_t i = next.fetch_add(1);
            if (i >= count)
                return;
            try {
                fn(i);
            } catch (...) {
                std::scoped_lock lock(err_mu);
                if (!err)
                    err = std::current_exception();
                return;
            }
        }
    };
    std::vector<std::thread> pool;
    pool.reserve(workers - 1);
    for (unsigned t = 0; t + 1 < workers; ++t)
        pool.emplace_back(run);
    run();
    for (auto& th : pool)
        th.join();
    if (err)
        std::rethrow_exception(err);
}

} // namespace monideal
