#pragma once

#include <cstddef>
#include <functional>

namespace convsec {

/// Worker count: CONVSEC_THREADS if set to a positive integer, otherwise the
/// hardware concurrency (at least 1).
unsigned thread_count();

/// Runs fn(0..n-1) on up to thread_count() threads. Results must be written
/// to per-index slots by the caller, so output order never depends on
/// scheduling. If any call throws, the exception of the lowest failing index
/// is rethrown after all workers finish.
void parallel_for(std::size_t n, const std::function<void(std::size_t)>& fn);

}  // namespace convsec
