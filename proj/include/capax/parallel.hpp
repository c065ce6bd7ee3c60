#pragma once

#include <cstddef>
#include <functional>

namespace capax {

// Number of worker threads: min(hardware, CAPAX_THREADS if set). Always >= 1.
int thread_count();

// Runs fn(i) for i in [0,n) across threads; results must be written into
// caller-owned slots so the merge order is deterministic.
void parallel_for(std::size_t n, const std::function<void(std::size_t)>& fn);

} // namespace capax
