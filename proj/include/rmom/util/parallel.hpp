#pragma once

#include <cstddef>
#include <functional>

namespace rmom::util {

// Worker count: RMOM_THREADS if set (>= 1), otherwise hardware concurrency.
int thread_count();

// Runs fn(i) for i in [0, n). Each index must write only to its own output
// slot; results are then independent of scheduling, so downstream reductions
// done in index order are deterministic for any thread count.
void parallel_for(std::size_t n, const std::function<void(std::size_t)>& fn);

}  // namespace rmom::util
