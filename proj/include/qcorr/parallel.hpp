#pragma once
// Deterministic data-parallel loop. Work is cut into fixed-size chunks
// (independent of the worker count) so per-chunk results can be reduced in
// chunk order, making the output identical for any QCORR_THREADS value.

#include <cstdint>
#include <functional>

namespace qcorr::par {

// Worker cap from QCORR_THREADS; 0 or unset means hardware concurrency.
unsigned worker_count();

inline constexpr std::uint64_t kChunkSize = 1u << 16;

// Calls fn(chunk_index, begin, end) for every chunk of [0, n).
void for_each_chunk(std::uint64_t n,
                    const std::function<void(std::uint64_t, std::uint64_t, std::uint64_t)>& fn);

inline std::uint64_t chunk_count(std::uint64_t n) { return (n + kChunkSize - 1) / kChunkSize; }

}  // namespace qcorr::par
