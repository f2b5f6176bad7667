#pragma once

#include <cstddef>
#include <functional>

namespace rephom {

// Worker count for block-parallel loops: REPHOM_THREADS if set (clamped to
// >= 1), otherwise the hardware concurrency.
std::size_t worker_count();

// Runs f(0..n-1) across workers.  Tasks must be independent; results are
// written into caller-owned slots, so the outcome is deterministic regardless
// of scheduling.  Exceptions propagate to the caller.
void parallel_for(std::size_t n, const std::function<void(std::size_t)>& f);

}  // namespace rephom
