#pragma once

#include <cstddef>
#include <functional>

namespace deko {

// Worker count used by parallel_for when the caller passes 0. Numeric
// results never depend on it: callers split work into a fixed chunk
// structure and reduce the chunk results in index order.
void set_default_threads(unsigned n);
unsigned default_threads();

// Runs fn(chunk) for chunk in [0, chunks), on up to `threads` workers
// (0 = default_threads()). The first exception thrown by any chunk is
// rethrown after all workers stop.
void parallel_for(std::size_t chunks, const std::function<void(std::size_t)>& fn,
                  unsigned threads = 0);

}  // namespace deko
