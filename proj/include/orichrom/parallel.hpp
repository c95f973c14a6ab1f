#pragma once

#include <algorithm>
#include <cstdint>
#include <exception>
#include <thread>
#include <vector>

namespace orichrom {

/// Splits [0, count) into `jobs` contiguous chunks and runs fn(worker, begin, end) on each, one
/// thread per chunk. The first exception thrown by any worker is rethrown after all join.
template <class Fn> void parallel_chunks(std::uint64_t count, int jobs, Fn &&fn)
{
    const auto workers = static_cast<std::uint64_t>(std::max(1, jobs));
    if (workers == 1 || count < 2) {
        fn(0, std::uint64_t{0}, count);
        return;
    }
    const auto used = std::min(workers, count);
    std::vector<std::exception_ptr> errors(used);
    std::vector<std::thread> threads;
    for (std::uint64_t w = 0; w < used; ++w) {
        const auto begin = count * w / used;
        const auto end = count * (w + 1) / used;
        threads.emplace_back([&, w, begin, end] {
            try {
                fn(static_cast<int>(w), begin, end);
            } catch (...) {
                errors[w] = std::current_exception();
            }
        });
    }
    for (auto &t : threads)
        t.join();
    for (auto &e : errors)
        if (e)
            std::rethrow_exception(e);
}

} // namespace orichrom
