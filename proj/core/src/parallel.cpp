#include "hrl/parallel.hpp"

#include <algorithm>
#include <thread>
#include <vector>

namespace hrl {

void parallel_for(long n, int threads, const std::function<void(long)>& fn) {
    if (n <= 0) return;
    long workers = std::min<long>(std::max(1, threads), n);
    if (workers == 1) {
        for (long i = 0; i < n; ++i) fn(i);
        return;
    }
    std::vector<std::thread> pool;
    pool.reserve(static_cast<size_t>(workers));
    for (long w = 0; w < workers; ++w) {
        long lo = n * w / workers, hi = n * (w + 1) / workers;
        pool.emplace_back([lo, hi, &fn] {
            for (long i = lo; i < hi; ++i) fn(i);
        });
    }
    for (auto& t : pool) t.join();
}

}  // namespace hrl
