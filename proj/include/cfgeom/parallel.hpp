#pragma once

#include <cstddef>
#include <functional>

namespace cfgeom {

/// Worker count: CFGEOM_THREADS if set and positive, else the hardware concurrency.
std::size_t thread_count();

/// Calls body(begin, end) on disjoint chunks covering [0, count), possibly concurrently.
/// Chunks below `grain` items run on the calling thread.
void parallel_for(std::size_t count, std::size_t grain,
                  const std::function<void(std::size_t, std::size_t)>& body);

}  // namespace cfgeom
