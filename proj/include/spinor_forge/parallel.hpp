#ifndef SPINOR_FORGE_PARALLEL_HPP
#define SPINOR_FORGE_PARALLEL_HPP

#include <cstddef>
#include <functional>

namespace spinor_forge {

/// Worker count: SPINOR_FORGE_THREADS when set to a positive integer,
/// otherwise the hardware concurrency.
unsigned thread_count();

/// Runs body(i) for i in [0, count). Each index is visited exactly once;
/// callers write results into per-index slots, so output order never depends
/// on scheduling. The first exception thrown by any body is rethrown.
void parallel_for(std::size_t count, const std::function<void(std::size_t)>& body);

}  // namespace spinor_forge

#endif  // SPINOR_FORGE_PARALLEL_HPP
