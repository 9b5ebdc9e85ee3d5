#pragma once

#include <cstddef>
#include <functional>

namespace pcl {

// Worker count: PCL_THREADS if set and positive, else hardware concurrency.
int thread_count();

// Calls fn(i) for i in [0, n) on up to `threads` workers (0 = thread_count()).
// Callers write results into preallocated slots so merges stay deterministic.
// The first exception thrown by any call is rethrown after all workers join.
void parallel_for(std::size_t n, const std::function<void(std::size_t)>& fn, int threads = 0);

}  // namespace pcl
