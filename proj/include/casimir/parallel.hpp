#pragma once

#include <cstddef>
#include <functional>

namespace casimir {

// Worker count: CASIMIR_THREADS if set (clamped to >= 1), otherwise the
// hardware concurrency.
int thread_budget();

// Runs body(i) for i in [0, n) on up to thread_budget() threads. Nested calls
// run serially in the calling thread, so only the outermost level fans out.
// The first exception thrown by any body is rethrown after the join.
void parallel_for(std::size_t n, const std::function<void(std::size_t)>& body);

}  // namespace casimir
