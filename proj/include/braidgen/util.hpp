#ifndef BRAIDGEN_UTIL_HPP
#define BRAIDGEN_UTIL_HPP

#include <atomic>
#include <cstddef>
#include <thread>
#include <vector>

namespace braidgen {

// Runs fn(index, thread_id) over 0..count-1 on up to `threads` workers.
// Work is handed out dynamically; fn must only touch thread-local state per
// thread_id.
template <typename Fn>
void parallel_for(std::size_t count, int threads, Fn&& fn) {
    if (threads <= 1 || count < 2) {
        for (std::size_t i = 0; i < count; ++i) fn(i, 0);
        return;
    }
    const int nworkers = std::min<int>(threads, static_cast<int>(count));
    std::atomic<std::size_t> next{0};
    std::vector<std::thread> pool;
    pool.reserve(static_cast<std::size_t>(nworkers));
    for (int t = 0; t < nworkers; ++t) {
        pool.emplace_back([&, t] {
            for (;;) {
                const std::size_t i = next.fetch_add(1);
                if (i >= count) return;
                fn(i, t);
            }
        });
    }
    for (std::thread& th : pool) th.join();
}

inline int default_thread_count() {
    const unsigned hc = std::thread::hardware_concurrency();
    return hc == 0 ? 1 : static_cast<int>(hc);
}

} // namespace braidgen

#endif
