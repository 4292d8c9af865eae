#pragma once

#include <cstddef>
#include <functional>

namespace teich2 {

// Worker count: TEICH2_THREADS if set to a positive integer, otherwise the
// hardware concurrency (at least 1).
unsigned thread_count();

// Runs body(i) for i in [0, n) across thread_count() workers. Callers write
// results by index, so assembly order never depends on scheduling. The first
// exception thrown by any body is rethrown after all workers join.
void parallel_for(std::size_t n, const std::function<void(std::size_t)>& body);

}  // namespace teich2
