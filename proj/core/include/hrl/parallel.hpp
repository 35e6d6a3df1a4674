#pragma once

#include <functional>

namespace hrl {

// Runs fn(i) for every i in [0, n), splitting the range into contiguous
// blocks across at most `threads` workers.  fn must confine its writes to
// state owned by its own index, so the outcome never depends on the
// schedule; threads <= 1 runs inline.
void parallel_for(long n, int threads, const std::function<void(long)>& fn);

}  // namespace hrl
