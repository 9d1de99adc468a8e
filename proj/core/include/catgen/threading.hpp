#pragma once

#include <cstddef>
#include <functional>

namespace catgen {

/// Number of worker threads used by parallel sweeps. Controlled by the
/// CATGEN_THREADS environment variable (read once, at first use); defaults to
/// the hardware concurrency and is clamped to at least 1.
std::size_t thread_count();

/// Runs fn(i) for i in [0, n). Iterations are distributed over
/// thread_count() workers in contiguous static blocks, so results written to
/// per-index slots are deterministic regardless of the thread count.
/// Falls back to a plain loop when n is small or one thread is configured.
/// The first exception thrown by any iteration is rethrown on the caller.
void parallel_for(std::size_t n, const std::function<void(std::size_t)>& fn);

} // namespace catgen
