#pragma once

#include <cstddef>
#include <functional>

namespace ginibre {

/// Worker count used when none is requested: GINIBRE_LAB_THREADS if set to a
/// positive integer, otherwise the available hardware parallelism.
int default_threads();

/// `requested` if positive, else default_threads().
int resolve_threads(int requested);

/// Runs body(i) for i in [0, count) on up to `threads` workers. Tasks must
/// write only to slots owned by their index. If any task throws, the
/// exception of the lowest failing index is rethrown after all tasks finish.
void parallel_for(std::size_t count, int threads, const std::function<void(std::size_t)>& body);

}  // namespace ginibre
