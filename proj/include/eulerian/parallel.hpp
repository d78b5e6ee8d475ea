#pragma once

#include <algorithm>
#include <atomic>
#include <cstddef>
#include <thread>
#include <vector>

namespace eulerian {

// Runs fn(task, local_table) for every task in [0, num_tasks) across up to
// `jobs` threads, each folding counts into its own table; tables merge by
// elementwise addition at the end. Addition is commutative, so the result is
// identical for every jobs value and schedule — parallelism never changes
// output, only wall time. With jobs <= 1 everything runs inline.
template <typename TaskFn>
std::vector<unsigned long long> parallel_fold_counts(int jobs, long num_tasks,
                                                     std::size_t table_size,
                                                     TaskFn&& fn) {
    jobs = std::max(1, jobs);
    if (num_tasks < jobs) jobs = static_cast<int>(std::max<long>(1, num_tasks));

    std::vector<unsigned long long> total(table_size, 0);
    if (jobs == 1) {
        for (long t = 0; t < num_tasks; ++t) fn(t, total);
        return total;
    }

    std::vector<std::vector<unsigned long long>> locals(
        jobs, std::vector<unsigned long long>(table_size, 0));
    std::atomic<long> next{0};
    std::vector<std::thread> pool;
    pool.reserve(jobs);
    for (int w = 0; w < jobs; ++w) {
        pool.emplace_back([&, w] {
            for (;;) {
                const long t = next.fetch_add(1, std::memory_order_relaxed);
                if (t >= num_tasks) break;
                fn(t, locals[w]);
            }
        });
    }
    for (auto& th : pool) th.join();
    for (const auto& local : locals)
        for (std::size_t k = 0; k < table_size; ++k) total[k] += local[k];
    return total;
}

}  // namespace eulerian
