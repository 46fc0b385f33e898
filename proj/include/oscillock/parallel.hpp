#pragma once

#include <cstddef>
#include <functional>

namespace oscillock {

// Worker count: OSCILLOCK_THREADS when set to a positive integer, otherwise
// the hardware concurrency (at least 1).
std::size_t worker_count();

// Calls body(i) for i in [0, count) across worker_count() threads. Each index
// is visited exactly once; callers write results into preallocated slots so
// output order does not depend on scheduling. The first exception thrown by
// any worker is rethrown after all workers join.
void parallel_for(std::size_t count, const std::function<void(std::size_t)>& body);

}  // namespace oscillock
