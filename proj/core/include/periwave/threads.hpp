#ifndef PERIWAVE_THREADS_HPP
#define PERIWAVE_THREADS_HPP

#include <atomic>
#include <cstdlib>
#include <thread>
#include <vector>

namespace periwave {

// Parallelism cap: PERIWAVE_THREADS (>=1), else hardware concurrency.
inline int thread_cap() {
    if (const char* env = std::getenv("PERIWAVE_THREADS")) {
        int n = std::atoi(env);
        if (n >= 1) return n;
    }
    unsigned hc = std::thread::hardware_concurrency();
    return hc ? static_cast<int>(hc) : 1;
}

// Deterministic parallel map over [0, n): each index is processed exactly
// once and results must be stored per-index by the callable.
template <class F>
void parallel_for(int n, F&& body) {
    int workers = std::min(thread_cap(), n);
    if (workers <= 1) {
        for (int i = 0; i < n; ++i) body(i);
        return;
    }
    std::atomic<int> next{0};
    std::vector<std::thread> pool;
    pool.reserve(workers);
    for (int w = 0; w < workers; ++w)
        pool.emplace_back([&] {
            for (int i = next.fetch_add(1); i < n; i = next.fetch_add(1)) body(i);
        });
    for (auto& t : pool) t.join();
}

} // namespace periwave

#endif
