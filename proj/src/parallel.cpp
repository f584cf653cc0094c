#include "qcorr/parallel.hpp"

#include <algorithm>
#include <atomic>
#include <cstdlib>
#include <thread>
#include <vector>

namespace qcorr::par {

unsigned worker_count() {
  unsigned cap = 0;
  if (const char* env = std::getenv("QCORR_THREADS")) {
    cap = static_cast<unsigned>(std::strtoul(env, nullptr, 10));
  }
  if (cap == 0) cap = std::max(1u, std::thread::hardware_concurrency());
  return cap;
}

void for_each_chunk(std::uint64_t n,
                    const std::function<void(std::uint64_t, std::uint64_t, std::uint64_t)>& fn) {
  if (n == 0) return;
  const std::uint64_t chunks = chunk_count(n);
  const unsigned workers = static_cast<unsigned>(
      std::min<std::uint64_t>(worker_count(), chunks));
  if (workers <= 1) {
    for (std::uint64_t c = 0; c < chunks; ++c) {
      fn(c, c * kChunkSize, std::min(n, (c + 1) * kChunkSize));
    }
    return;
  }
  std::atomic<std::uint64_t> next{0};
  std::vector<std::thread> pool;
  pool.reserve(workers);
  for (unsigned w = 0; w < workers; ++w) {
    pool.emplace_back([&] {
      for (;;) {
        const std::uint64_t c = next.fetch_add(1, std::memory_order_relaxed);
        if (c >= chunks) return;
        fn(c, c * kChunkSize, std::min(n, (c + 1) * kChunkSize));
      }
    });
  }
  for (auto& t : pool) t.join();
}

}  // namespace qcorr::par
