#pragma once

#include <cstddef>
#include <functional>

namespace tsfex {

// Worker threads used by parallel_for; 0 means hardware concurrency.
void set_thread_count(int n);
int thread_count();

// Runs fn(i) for every i in [0, n). Callers must write only to per-index
// slots; results are then independent of the thread count.
void parallel_for(std::size_t n, const std::function<void(std::size_t)>& fn);

}  // namespace tsfex
