#pragma once

#include <cstddef>
#include <functional>

namespace wqed {

/// Number of worker threads for jobs <= 0 (all hardware threads).
unsigned effective_jobs(int jobs);

/// Runs body(i) for i in [0, n) on up to `jobs` threads.  Work is handed
/// out through an atomic counter; the caller is responsible for writing
/// results into per-index slots so that assembly is deterministic.  The
/// first exception thrown by any body is rethrown after all workers join.
void parallel_for(std::size_t n, int jobs, const std::function<void(std::size_t)>& body);

}  // namespace wqed
