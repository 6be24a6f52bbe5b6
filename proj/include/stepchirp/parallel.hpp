// parallel.hpp - deterministic indexed parallel loop
#pragma once

#include <cstddef>
#include <functional>

namespace stepchirp {

/// Runs fn(i) for i in [0, count) on up to `threads` workers. Iterations
/// must write only to their own slot; results are then independent of the
/// schedule, so outputs stay byte-identical at any thread count.
void parallel_for(std::size_t count, int threads,
                  const std::function<void(std::size_t)>& fn);

}  // namespace stepchirp
