#pragma once

#include <cstddef>
#include <functional>

namespace rfci {

// Worker count: requested > 0 wins, then RFPIM_THREADS, then hardware.
std::size_t resolve_threads(std::size_t requested);

// Runs fn(0..count-1) on up to `threads` workers. Units must be independent;
// the first exception thrown by any unit is rethrown after all workers join.
void parallel_for(std::size_t count, std::size_t threads,
                  const std::function<void(std::size_t)>& fn);

}  // namespace rfci
