// Minimal deterministic parallel-for.
//
// Work items are independent and write only to their own slot, so the level
// of parallelism never changes any result.  TAUTRANK_THREADS caps the worker
// count (1 = fully sequential).

#pragma once

#include <cstddef>
#include <functional>

namespace tautrank {

/// Worker cap: TAUTRANK_THREADS when set (clamped to [1, 64]), otherwise
/// the hardware concurrency.
std::size_t thread_budget();

void parallel_for(std::size_t n, const std::function<void(std::size_t)>& fn);

}  // namespace tautrank
