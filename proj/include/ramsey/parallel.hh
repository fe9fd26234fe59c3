#ifndef RAMSEY_PARALLEL_HH
#define RAMSEY_PARALLEL_HH

#include <atomic>
#include <cstddef>
#include <exception>
#include <thread>
#include <vector>

namespace ramsey
{
    /// RAMSEY_WB_JOBS when set to a positive integer, else the hardware
    /// thread count (at least 1).
    auto default_jobs() -> unsigned;

    /// results[i] = f(i) for i < count, computed on up to `jobs` threads.
    /// Results land by index, so the output does not depend on scheduling.
    /// The exception of the lowest failing index is rethrown.
    template <typename Result, typename F>
    auto parallel_map(std::size_t count, unsigned jobs, F && f) -> std::vector<Result>
    {
        std::vector<Result> results(count);
        std::vector<std::exception_ptr> failures(count);
        std::atomic<std::size_t> next{ 0 };

        auto work = [&] {
            for (std::size_t i ; (i = next++) < count ; ) {
                try {
                    results[i] = f(i);
                }
                catch (...) {
                    failures[i] = std::current_exception();
                }
            }
        };

        unsigned threads = jobs < 1 ? 1 : jobs;
        if (threads == 1 || count < 2)
            work();
        else {
            std::vector<std::jthread> pool;
            for (unsigned t = 0 ; t < threads && t < count ; ++t)
                pool.emplace_back(work);
        }

        for (auto & e : failures)
            if (e)
                std::rethrow_exception(e);
        return results;
    }
}

#endif
