#pragma once

#include <cstddef>
#include <functional>

namespace qapprox {

// Worker count: hardware concurrency, capped by QAPPROX_THREADS when set.
unsigned worker_count();

// Runs body(i) for i in [0, count).  Each index is handled exactly once, so a
// body that writes only to slot i yields results independent of scheduling.
// The first exception thrown by any worker is rethrown on the caller.
void parallel_for(std::size_t count, const std::function<void(std::size_t)>& body);

}  // namespace qapprox
