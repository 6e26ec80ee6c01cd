#pragma once

#include <cstdint>
#include <cstdlib>
#include <thread>
#include <vector>

namespace fracset {

// Worker count: hardware concurrency, capped by FRACSET_THREADS when set.
inline unsigned worker_count() {
    unsigned n = std::thread::hardware_concurrency();
    if (n == 0) n = 1;
    if (const char* env = std::getenv("FRACSET_THREADS")) {
        char* end = nullptr;
        unsigned long cap = std::strtoul(env, &end, 10);
        if (end != env && cap >= 1 && cap < n) n = static_cast<unsigned>(cap);
    }
    return n;
}

// Runs fn(chunk_index, begin, end) over contiguous chunks of [0, n).
// Callers merge per-chunk results in chunk order, so output does not
// depend on the split.
template <typename Fn>
void parallel_chunks(std::size_t n, Fn&& fn) {
    unsigned workers = worker_count();
    if (n == 0) return;
    if (workers <= 1 || n < 1024) {
        fn(0u, std::size_t{0}, n);
        return;
    }
    if (workers > n) workers = static_cast<unsigned>(n);
    std::vector<std::thread> threads;
    threads.reserve(workers);
    for (unsigned t = 0; t < workers; ++t) {
        std::size_t begin = n * t / workers;
        std::size_t end = n * (t + 1) / workers;
        threads.emplace_back([&fn, t, begin, end] { fn(t, begin, end); });
    }
    for (auto& th : threads) th.join();
}

} // namespace fracset
