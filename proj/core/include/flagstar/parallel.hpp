#pragma once

#include <cstddef>
#include <functional>

namespace flagstar {

/// Worker count: FLAGSTAR_THREADS if set to a positive integer, otherwise
/// the hardware concurrency.
std::size_t thread_count();

/// Runs body(i) for i in [0, count) on up to thread_count() threads. The
/// first exception thrown by any iteration is rethrown after all workers
/// have joined.
void parallel_for(std::size_t count, const std::function<void(std::size_t)>& body);

}  // namespace flagstar
