#pragma once

#include <cstddef>
#include <functional>

namespace momentum_lab {

// Number of worker threads data-parallel helpers may use.  Reads the
// MOMENTUM_LAB_THREADS environment variable (values >= 1); falls back to
// std::thread::hardware_concurrency() and is always at least 1.
unsigned parallel_thread_cap();

// Splits [0, n) into contiguous chunks and runs `chunk_fn(begin, end)` on each,
// using at most parallel_thread_cap() threads.  Chunk boundaries depend only on
// n and the thread cap, so deterministic per-chunk partial results can be
// reduced in index order by the caller.  Exceptions thrown by chunk_fn are
// rethrown (the first one, by chunk index) after all workers have joined.
void parallel_for(std::size_t n, const std::function<void(std::size_t, std::size_t)>& chunk_fn);

}  // namespace momentum_lab
