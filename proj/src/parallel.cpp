#include "capax/parallel.hpp"

#include <atomic>
#include <cstdlib>
#include <thread>
#include <vector>

namespace capax {

int thread_count() {
    int hw = static_cast<int>(std::thread::hardware_concurrency());
    if (hw <= 0) hw = 1;
    if (const char* env = std::getenv("CAPAX_THREADS")) {
        int cap = std::atoi(env);
        if (cap >= 1 && cap < hw) hw = cap;
    }
    return hw;
}

void parallel_for(std::size_t n, const std::function<void(std::size_t)>& fn) {
    int workers = thread_count();
    if (n == 0) return;
    if (workers == 1 || n == 1) {
        for (std::size_t i = 0; i < n; ++i) fn(i);
        return;
    }
    std::atomic<std::size_t> next{0};
    auto body = [&] {
        for (;;) {
            std::size_t i = next.fetch_add(1);
            if (i >= n) break;
            fn(i);
        }
    };
    std::vector<std::thread> pool;
    int spawn = workers - 1;
    if (static_cast<std::size_t>(spawn) > n - 1) spawn = static_cast<int>(n - 1);
    pool.reserve(spawn);
    for (int t = 0; t < spawn; ++t) pool.emplace_back(body);
    body();
    for (auto& th : pool) th.join();
}

} // namespace capax
