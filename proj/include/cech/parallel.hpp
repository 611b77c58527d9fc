#pragma once

#include <cstddef>
#include <functional>

namespace cech {

/// Resolves a requested worker count: 0 means one per hardware thread.
unsigned resolve_threads(unsigned requested);

/// Splits [0, n) into `chunks` contiguous ranges and runs
/// fn(chunk, begin, end) for each, on up to `threads` workers. Chunk c always
/// covers the same range, so callers can reduce per-chunk results in chunk
/// order and stay deterministic for any thread count.
void parallel_chunks(std::size_t n, std::size_t chunks, unsigned threads,
                     const std::function<void(std::size_t, std::size_t, std::size_t)>& fn);

}  // namespace cech
