#pragma once
// Thin chunked-work helper. Everything that parallelizes does so over an
// index range with per-chunk state merged in chunk order afterwards, so
// results never depend on the worker count.

#include <cstdint>
#include <functional>

namespace permpoly {

// Worker-count resolution: explicit request > PERMPOLY_WORKERS env >
// std::thread::hardware_concurrency(), floor 1.
unsigned resolve_workers(unsigned requested = 0);

// Splits [0, n) into `workers` contiguous chunks, runs fn(chunk_index, lo,
// hi) concurrently (chunk 0 on the calling thread) and joins. fn must be
// thread-safe in whatever it touches.
void run_chunked(uint64_t n, unsigned workers,
                 const std::function<void(unsigned, uint64_t, uint64_t)>& fn);

}  // namespace permpoly
