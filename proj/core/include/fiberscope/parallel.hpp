#pragma once

#include <cstddef>
#include <functional>

namespace fiberscope {

/// Worker count: FIBERSCOPE_THREADS when set (clamped to >= 1), otherwise
/// the hardware concurrency.
std::size_t worker_count();

/// Runs fn(i) for i in [0, n). Results must be written by index by the
/// callers so that assembly is deterministic regardless of scheduling.
void parallel_for(std::size_t n, const std::function<void(std::size_t)>& fn);

}  // namespace fiberscope
