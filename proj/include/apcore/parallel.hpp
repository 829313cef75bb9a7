#pragma once

#include <cstddef>
#include <functional>

namespace apcore {

/// Worker count: APCORE_THREADS if set to a positive integer, else hardware concurrency.
unsigned thread_count();

/// Runs body(i) for i in [0, n) on up to thread_count() threads. Callers write
/// results into per-index slots so the outcome does not depend on scheduling.
void parallel_for(std::size_t n, const std::function<void(std::size_t)>& body);

} // namespace apcore
