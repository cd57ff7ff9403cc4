#pragma once

#include <cstddef>
#include <functional>

namespace halfdepth {

/// Caps the worker count used by parallel_for (0 = hardware concurrency).
void set_max_threads(unsigned n);
unsigned max_threads();

/// Runs fn(i) for i in [0, n) on up to max_threads() workers. Work items must
/// be independent; no ordering is guaranteed. Falls back to a plain loop for
/// small n or a single worker.
void parallel_for(std::size_t n, const std::function<void(std::size_t)>& fn);

}  // namespace halfdepth
