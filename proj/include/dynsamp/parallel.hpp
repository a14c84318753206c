#pragma once

#include <functional>

namespace dynsamp {

/// Worker count used by parallel helpers: DYNSAMP_THREADS when set (clamped
/// to >= 1), otherwise the hardware concurrency.
int worker_count();

/// Runs fn(i) for i in [0, n) across workers with a static partition.
/// Callers write results into index-addressed slots, so the merge is
/// deterministic regardless of scheduling.
void parallel_for(int n, const std::function<void(int)>& fn);

}  // namespace dynsamp
