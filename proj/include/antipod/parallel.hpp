#pragma once

#include <functional>

namespace antipod {

/// Worker count for pair loops: hardware concurrency capped by the
/// ANTIPOD_THREADS environment variable (>= 1).
int worker_count();

/// Runs fn(i) for i in [0, count) on worker threads. Results must be
/// written to pre-sized per-index slots so the merge is deterministic.
void parallel_for(int count, const std::function<void(int)>& fn);

}  // namespace antipod
