#pragma once

#include <algorithm>
#include <atomic>
#include <exception>
#include <functional>
#include <mutex>
#include <thread>
#include <vector>

namespace spdual {

/// Number of worker threads for a requested count (0 = auto).
inline int resolve_threads(int requested) {
    if (requested > 0) return requested;
    const unsigned hw = std::thread::hardware_concurrency();
    return std::clamp<int>(static_cast<int>(hw), 1, 16);
}

inline constexpr int kPathBlockSize = 32;

/// Runs fn(block_index, first_path, last_path) over fixed-size blocks of
/// [0, num_paths). Block boundaries depend only on num_paths, never on the
/// thread count, so per-block partial results can be reduced in block order
/// to give bit-identical totals for any number of workers.
inline void for_each_path_block(int num_paths, int threads,
                                const std::function<void(int, int, int)>& fn) {
    const int num_blocks = (num_paths + kPathBlockSize - 1) / kPathBlockSize;
    const int workers = std::min(resolve_threads(threads), std::max(num_blocks, 1));
    if (workers <= 1 || num_blocks <= 1) {
        for (int b = 0; b < num_blocks; ++b) {
            const int lo = b * kPathBlockSize;
            const int hi = std::min(num_paths, lo + kPathBlockSize);
            fn(b, lo, hi);
        }
        return;
    }

    std::atomic<int> next{0};
    std::exception_ptr error;
    std::mutex error_mutex;
    auto worker = [&]() {
        for (;;) {
            const int b = next.fetch_add(1);
            if (b >= num_blocks) return;
            const int lo = b * kPathBlockSize;
            const int hi = std::min(num_paths, lo + kPathBlockSize);
            try {
                fn(b, lo, hi);
            } catch (...) {
                std::scoped_lock lk(error_mutex);
                if (!error) error = std::current_exception();
                return;
            }
        }
    };

    std::vector<std::thread> pool;
    pool.reserve(static_cast<std::size_t>(workers));
    for (int w = 0; w < workers; ++w) pool.emplace_back(worker);
    for (auto& t : pool) t.join();
    if (error) std::rethrow_exception(error);
}

}  // namespace spdual
