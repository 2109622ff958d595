#pragma once

#include <cstddef>
#include <functional>

namespace vstirap {

/// Worker count from VSTIRAP_WORKERS, falling back to the hardware concurrency.
/// Throws ConfigError if the variable is set but not an integer >= 1.
unsigned default_workers();

/// Calls fn(i) for every i in [0, n) on up to `workers` threads. Indices are
/// handed out dynamically; callers write results into index-addressed slots so
/// the outcome does not depend on scheduling. The first exception thrown by fn
/// is rethrown after all workers have joined.
void parallel_for(std::size_t n, unsigned workers, const std::function<void(std::size_t)>& fn);

}  // namespace vstirap
