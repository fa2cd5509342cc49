#pragma once

#include <algorithm>
#include <functional>
#include <mutex>
#include <stdexcept>
#include <thread>
#include <vector>

namespace diracint {

// Applies fn to 0..n-1 on up to `threads` workers; results keep index order,
// so output is identical to the serial run.
template <typename T>
std::vector<T> parallel_map(size_t n, int threads, const std::function<T(size_t)>& fn) {
    if (threads < 1) throw std::invalid_argument("parallel_map: threads must be >= 1");
    std::vector<T> out(n);
    if (n == 0) return out;
    size_t workers = std::min<size_t>(static_cast<size_t>(threads), n);
    if (workers == 1) {
        for (size_t i = 0; i < n; ++i) out[i] = fn(i);
        return out;
    }
    std::vector<std::thread> pool;
    pool.reserve(workers);
    std::exception_ptr first_error;
    std::mutex err_mu;
    for (size_t w = 0; w < workers; ++w) {
        pool.emplace_back([&, w]() {
            try {
                for (size_t i = w; i < n; i += workers) out[i] = fn(i);
            } catch (...) {
                std::lock_guard<std::mutex> lock(err_mu);
                if (!first_error) first_error = std::current_exception();
            }
        });
    }
    for (std::thread& t : pool) t.join();
    if (first_error) std::rethrow_exception(first_error);
    return out;
}

}  // namespace diracint
