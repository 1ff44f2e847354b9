#pragma once

#include <cstddef>
#include <functional>

namespace gaugewheel {

/// Worker count from GAUGEWHEEL_THREADS, else the hardware concurrency (>= 1).
[[nodiscard]] std::size_t default_worker_count();

/// Calls body(i) for every i in [0, n), split into contiguous blocks across
/// `workers` threads (0 selects default_worker_count()). Each index is visited
/// exactly once; callers write results into per-index slots so the outcome
/// does not depend on the partitioning. The first exception thrown by any
/// worker is rethrown after all workers join.
void parallel_for(std::size_t n, std::size_t workers, const std::function<void(std::size_t)>& body);

}  // namespace gaugewheel
