#pragma once

#include <functional>

namespace strichartz {

// Runs fn(i) for i in [0, count) on up to `threads` workers (0 = hardware
// concurrency). Tasks must be independent; callers keep determinism by
// writing to per-index slots and reducing in index order afterwards.
void parallel_for(std::size_t count, int threads,
                  const std::function<void(std::size_t)>& fn);

}  // namespace strichartz
