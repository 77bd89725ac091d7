#pragma once

#include <functional>

namespace cf {

// Worker count: CHIRPFRAME_THREADS if set (clamped to [1, 64]), else the
// hardware concurrency.
int worker_count();

// Runs fn(i) for i in [0, n). Iterations are distributed in fixed
// contiguous blocks, so writes to disjoint preallocated slots are
// deterministic regardless of the worker count.
void parallel_for(int n, const std::function<void(int)>& fn);

}  // namespace cf
