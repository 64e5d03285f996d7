#pragma once

#include <cstddef>
#include <functional>

namespace sortnet {

/// Thread budget: `requested` if positive; else SORTNET_THREADS if set
/// to a positive integer; else the hardware concurrency; at least 1.
int resolve_threads(int requested);

/// Runs fn(i) for every i in [0, count), the range split into
/// contiguous chunks across `threads` workers. fn must only touch
/// state owned by index i. threads <= 1 (or a tiny range) runs inline.
/// The first exception thrown by any worker is rethrown to the caller.
void parallel_for(std::size_t count, int threads,
                  const std::function<void(std::size_t)>& fn);

}  // namespace sortnet
