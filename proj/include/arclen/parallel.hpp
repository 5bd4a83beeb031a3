#pragma once

#include <algorithm>
#include <cstddef>
#include <thread>
#include <vector>

namespace arclen {

// Runs body(i) for i in [0, n) on a small thread pool; body must be safe to run concurrently
// for distinct i.
template <class F>
void parallel_for(std::size_t n, F&& body)
{
    const std::size_t hw = std::max<unsigned>(1u, std::thread::hardware_concurrency());
    const std::size_t workers = std::min(hw, n);
    if (workers <= 1) {
        for (std::size_t i = 0; i < n; ++i) body(i);
        return;
    }
    std::vector<std::thread> pool;
    pool.reserve(workers);
    for (std::size_t w = 0; w < workers; ++w) {
        pool.emplace_back([&, w] {
            for (std::size_t i = w; i < n; i += workers) body(i);
        });
    }
    for (auto& t : pool) t.join();
}

} // namespace arclen
