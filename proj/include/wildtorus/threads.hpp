#pragma once
// Deterministic parallel-for. Work items have independent output slots, so
// results do not depend on thread schedule. WILDTORUS_THREADS caps the pool.
#include <cstddef>
#include <functional>

namespace wildtorus {

// number of worker threads (>=1), honoring WILDTORUS_THREADS
int thread_budget();

// run fn(i) for i in [0,n); fn must only write to slot i of its outputs
void parallel_for(size_t n, const std::function<void(size_t)>& fn);

} // namespace wildtorus
