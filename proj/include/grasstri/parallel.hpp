#pragma once

#include <cstddef>
#include <functional>

namespace grasstri {

/// Worker count from GRASSTRI_THREADS (0 or unset = hardware concurrency).
std::size_t worker_count();

/// Run body(begin, end) over contiguous chunks of [0, n). Chunk i always
/// covers the same range for a given worker count; bodies must only write
/// to disjoint outputs.
void parallel_for(std::size_t n, const std::function<void(std::size_t, std::size_t)>& body);

}  // namespace grasstri
