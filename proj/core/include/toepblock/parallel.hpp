#pragma once

#include <algorithm>
#include <exception>
#include <thread>
#include <vector>

namespace toepblock {

inline int default_jobs() {
    const unsigned hw = std::thread::hardware_concurrency();
    return hw ? static_cast<int>(hw) : 1;
}

// Runs fn(chunk_index, begin, end) over a partition of [0, total) into at most
// `jobs` contiguous chunks. The first exception thrown by any chunk is
// rethrown after all workers join. jobs <= 1 runs inline.
template <typename Fn>
void parallel_chunks(int jobs, int total, Fn&& fn) {
    if (total <= 0) return;
    jobs = std::max(1, std::min(jobs, total));
    if (jobs == 1) {
        fn(0, 0, total);
        return;
    }
    std::vector<std::thread> workers;
    std::vector<std::exception_ptr> errors(static_cast<std::size_t>(jobs));
    const int base = total / jobs, extra = total % jobs;
    int begin = 0;
    for (int c = 0; c < jobs; ++c) {
        const int end = begin + base + (c < extra ? 1 : 0);
        workers.emplace_back([&, c, begin, end] {
            try {
                fn(c, begin, end);
            } catch (...) {
                errors[static_cast<std::size_t>(c)] = std::current_exception();
            }
        });
        begin = end;
    }
    for (auto& worker : workers) worker.join();
    for (const auto& error : errors) {
        if (error) std::rethrow_exception(error);
    }
}

}  // namespace toepblock
