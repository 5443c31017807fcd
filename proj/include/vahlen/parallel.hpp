#pragma once

#include <algorithm>
#include <cstdint>
#include <cstdlib>
#include <exception>
#include <mutex>
#include <thread>
#include <vector>

namespace vahlen {

// Worker count: VAHLEN_THREADS when set and positive, otherwise (0, unset
// or garbage) the hardware concurrency.
inline unsigned thread_count() {
    if (const char* env = std::getenv("VAHLEN_THREADS")) {
        char* end = nullptr;
        long v = std::strtol(env, &end, 10);
        if (end != env && *end == '\0' && v > 0)
            return unsigned(std::min(v, 256L));
    }
    unsigned hw = std::thread::hardware_concurrency();
    return hw ? hw : 1;
}

// Run body(worker, begin, end) over a partition of [0, total).  Results
// must be merged by worker index afterwards to stay deterministic.
template <typename Body>
inline void parallel_ranges(std::uint64_t total, unsigned workers, Body&& body) {
    if (total == 0)
        return;
    if (workers <= 1 || total < 2 * workers) {
        body(0u, std::uint64_t(0), total);
        return;
    }
    std::uint64_t chunk = (total + workers - 1) / workers;
    std::vector<std::thread> threads;
    std::exception_ptr error;
    std::mutex mu;
    for (unsigned w = 0; w < workers; ++w) {
        std::uint64_t begin = std::uint64_t(w) * chunk;
        std::uint64_t end = std::min(total, begin + chunk);
        if (begin >= end)
            break;
        threads.emplace_back([&, w, begin, end] {
            try {
                body(w, begin, end);
            } catch (...) {
                std::lock_guard<std::mutex> lock(mu);
                if (!error)
                    error = std::current_exception();
            }
        });
    }
    for (auto& t : threads)
        t.join();
    if (error)
        std::rethrow_exception(error);
}

} // namespace vahlen
