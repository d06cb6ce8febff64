#pragma once

#include <cstddef>
#include <functional>

namespace modjoin {

/// Worker count from MODJOIN_THREADS (default: hardware concurrency, min 1).
std::size_t thread_count();

/// Runs body(i) for i in [0, n) on up to thread_count() threads using static
/// contiguous chunks. Callers write results into per-index slots, so output
/// never depends on scheduling. The first exception thrown is rethrown.
void parallel_for(std::size_t n, const std::function<void(std::size_t)>& body);

}  // namespace modjoin
