#pragma once

#include <algorithm>
#include <atomic>
#include <exception>
#include <functional>
#include <mutex>
#include <thread>
#include <vector>

namespace codewidth::detail {

inline int resolve_threads(int requested) {
    if (requested > 0) return requested;
    const unsigned hw = std::thread::hardware_concurrency();
    return hw == 0 ? 1 : static_cast<int>(hw);
}

/// Runs fn(chunk) for every chunk index in [0, num_chunks) across a pool of
/// workers. Callers collect per-chunk results and combine them in chunk
/// order, which keeps outcomes independent of scheduling.
inline void for_each_chunk(long long num_chunks, int threads, const std::function<void(long long)>& fn) {
    threads = resolve_threads(threads);
    if (threads == 1 || num_chunks <= 1) {
        for (long long c = 0; c < num_chunks; ++c) fn(c);
        return;
    }
    std::atomic<long long> next{0};
    std::exception_ptr error;
    std::mutex error_mutex;
    auto worker = [&] {
        for (;;) {
            const long long c = next.fetch_add(1);
            if (c >= num_chunks) return;
            try {
                fn(c);
            } catch (...) {
                std::lock_guard<std::mutex> lock(error_mutex);
                if (!error) error = std::current_exception();
                return;
            }
        }
    };
    std::vector<std::thread> pool;
    const int workers = static_cast<int>(std::min<long long>(threads, num_chunks));
    pool.reserve(static_cast<std::size_t>(workers));
    for (int t = 0; t < workers; ++t) pool.emplace_back(worker);
    for (auto& th : pool) th.join();
    if (error) std::rethrow_exception(error);
}

}  // namespace codewidth::detail
