#pragma once

#include <cstddef>
#include <functional>

namespace cognet {

// Process-wide worker count used by every parallel section. 0 = hardware concurrency.
void set_worker_count(unsigned workers);
unsigned worker_count();

// Calls fn(i) for i in [0, n) across the configured workers. Callers write
// results by index, so output never depends on scheduling. The first
// exception thrown by any task is rethrown after all workers stop.
void parallel_for(std::size_t n, const std::function<void(std::size_t)>& fn);

}  // namespace cognet
