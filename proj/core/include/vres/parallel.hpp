#pragma once

#include <cstddef>
#include <future>
#include <thread>
#include <vector>

namespace vres {

/// Run body(i) for i in [0, n) across a small worker pool. Results must be
/// written to index-addressed storage by the body, so the outcome is
/// deterministic regardless of scheduling. Exceptions propagate.
template <class Body>
void parallel_for(std::size_t n, Body&& body) {
    if (n == 0) return;
    std::size_t workers = std::min<std::size_t>(std::max(1u, std::thread::hardware_concurrency()), n);
    if (workers <= 1) {
        for (std::size_t i = 0; i < n; ++i) body(i);
        return;
    }
    std::vector<std::future<void>> futs;
    for (std::size_t w = 0; w < workers; ++w)
        futs.push_back(std::async(std::launch::async, [&, w] {
            for (std::size_t i = w; i < n; i += workers) body(i);
        }));
    for (auto& f : futs) f.get();
}

}  // namespace vres
