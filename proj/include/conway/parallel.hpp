#pragma once

#include <cstddef>
#include <functional>
#include <optional>

namespace conway {

// Resolves a worker count: a positive request wins, otherwise the
// CONWAY_THREADS environment variable, otherwise the hardware count.
int resolve_threads(int requested);

// Runs fn(begin, end) over a contiguous partition of [0, n).  Results must
// be aggregated order-independently by the caller.
void parallel_chunks(std::size_t n, int threads,
                     const std::function<void(std::size_t, std::size_t)>& fn);

// Smallest index in [0, n) where probe returns true.  The result is
// independent of the thread count.
std::optional<std::size_t> parallel_first_hit(std::size_t n, int threads,
                                              const std::function<bool(std::size_t)>& probe);

}  // namespace conway
