#ifndef BICRIT_PARALLEL_HPP
#define BICRIT_PARALLEL_HPP

#include <cstddef>
#include <mutex>
#include <thread>
#include <vector>

#include "bicrit/real.hpp"

namespace bicrit {

// Static-chunked parallel for. Results must be written to per-index slots so
// the output does not depend on the thread count. Worker threads inherit the
// caller's Real precision.
template <class Fn>
void parallel_for(std::size_t n, int threads, Fn&& fn) {
    if (threads <= 0) threads = static_cast<int>(std::thread::hardware_concurrency());
    if (threads <= 1 || n < 2) {
        for (std::size_t i = 0; i < n; ++i) fn(i);
        return;
    }
    unsigned digits = Real::default_precision();
    std::size_t nthreads = std::min<std::size_t>(static_cast<std::size_t>(threads), n);
    std::vector<std::thread> pool;
    pool.reserve(nthreads);
    std::exception_ptr error;
    std::mutex error_mu;
    for (std::size_t t = 0; t < nthreads; ++t) {
        pool.emplace_back([&, t] {
            Real::default_precision(digits);
            std::size_t lo = n * t / nthreads, hi = n * (t + 1) / nthreads;
            try {
                for (std::size_t i = lo; i < hi; ++i) fn(i);
            } catch (...) {
                std::lock_guard<std::mutex> lock(error_mu);
                if (!error) error = std::current_exception();
            }
        });
    }
    for (auto& th : pool) th.join();
    if (error) std::rethrow_exception(error);
}

}  // namespace bicrit

#endif
