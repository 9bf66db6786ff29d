#pragma once

#include <cstddef>
#include <functional>

namespace hyperharm {

// Worker count: hardware concurrency capped by HYPERHARM_THREADS.
unsigned thread_count();

// Runs body(i) for i in [0, n). Exceptions from workers are rethrown
// (the one with the smallest index wins, so results stay deterministic).
void parallel_for(std::size_t n, const std::function<void(std::size_t)>& body);

}  // namespace hyperharm
