#pragma once

#include <cstddef>
#include <functional>

namespace harper {

/// Worker count for data-parallel sweeps: explicit override, else the
/// HARPER_THREADS environment variable, else hardware concurrency.
std::size_t worker_count();
void set_worker_count(std::size_t n);  // 0 restores the default

/// Runs body(i) for i in [0, n) on worker_count() threads with static
/// chunking. Bodies must write to disjoint slots; results are then
/// independent of the thread count.
void parallel_for(std::size_t n, const std::function<void(std::size_t)>& body);

}  // namespace harper
