#pragma once

#include <cstddef>
#include <functional>

namespace illume {

/// Worker count: ILLUME_THREADS if set and positive, else hardware concurrency.
std::size_t worker_count();

/// Runs body(i) for i in [0, n) on up to worker_count() threads. Exceptions
/// thrown by body are rethrown on the calling thread (first by index).
void parallel_for(std::size_t n, const std::function<void(std::size_t)>& body);

} // namespace illume
