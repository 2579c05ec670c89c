#pragma once

#include <cstddef>
#include <functional>

namespace qmc {

// Worker count: $QMC_THREADS when set to a positive integer, otherwise the
// hardware concurrency.
int max_threads();

// Runs body(0..count-1) on up to max_threads() threads. The first exception
// thrown by any call is rethrown after all workers finish.
void parallel_for(std::size_t count, const std::function<void(std::size_t)>& body);

}  // namespace qmc
