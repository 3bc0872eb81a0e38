#pragma once

#include <cstddef>
#include <functional>

namespace spde::par {

// Worker count: SPDE_LAB_THREADS if set, otherwise hardware concurrency.
int max_threads();

// Runs body(i) for i in [0, n). Each index must write only its own output
// slot; together with index-ordered reductions this keeps results identical
// for every worker count.
void parallel_for(std::size_t n, const std::function<void(std::size_t)>& body);

}  // namespace spde::par
