#pragma once

#include <atomic>
#include <cstddef>
#include <exception>
#include <mutex>
#include <thread>
#include <vector>

namespace ptwave {

// Worker cap for grid fan-out. 1 (the default) keeps everything on the
// calling thread. Results never depend on the setting: each index is
// computed independently and stored by position.
inline std::atomic<int>& thread_budget() {
    static std::atomic<int> n{1};
    return n;
}

inline void set_threads(int n) { thread_budget() = n < 1 ? 1 : n; }

template <class Fn>
void parallel_for(std::size_t count, Fn&& fn) {
    int budget = thread_budget().load();
    unsigned hw = std::thread::hardware_concurrency();
    if (hw > 0 && budget > static_cast<int>(hw)) budget = static_cast<int>(hw);
    if (budget <= 1 || count < 2) {
        for (std::size_t i = 0; i < count; ++i) fn(i);
        return;
    }
    std::atomic<std::size_t> next{0};
    std::exception_ptr first_error;
    std::mutex error_mtx;
    auto worker = [&] {
        for (;;) {
            std::size_t i = next.fetch_add(1);
            if (i >= count) return;
            try {
                fn(i);
            } catch (...) {
                std::lock_guard<std::mutex> lock(error_mtx);
                if (!first_error) first_error = std::current_exception();
                return;
            }
        }
    };
    std::vector<std::thread> pool;
    int n_threads = budget < static_cast<int>(count) ? budget
                                                     : static_cast<int>(count);
    pool.reserve(static_cast<std::size_t>(n_threads) - 1);
    for (int t = 1; t < n_threads; ++t) pool.emplace_back(worker);
    worker();
    for (auto& th : pool) th.join();
    if (first_error) std::rethrow_exception(first_error);
}

} // namespace ptwave
