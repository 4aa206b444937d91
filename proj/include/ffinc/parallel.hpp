#pragma once

#include <atomic>
#include <cstdint>
#include <thread>
#include <vector>

namespace ffinc {

inline unsigned resolve_workers(unsigned requested) {
  if (requested > 0) return requested;
  unsigned hw = std::thread::hardware_concurrency();
  return hw > 0 ? hw : 1;
}

// Runs fn(block_index, begin, end) over [0, total) split into fixed-size
// blocks and stores each block's result at its block index, so the merged
// output is identical for any worker count.
template <class R, class Fn>
std::vector<R> parallel_blocks(uint64_t total, uint64_t block_size, unsigned workers, Fn&& fn) {
  if (block_size == 0) block_size = 1;
  uint64_t nblocks = total == 0 ? 0 : (total + block_size - 1) / block_size;
  std::vector<R> results(static_cast<size_t>(nblocks));
  if (nblocks == 0) return results;

  unsigned nthreads = resolve_workers(workers);
  if (nthreads > nblocks) nthreads = static_cast<unsigned>(nblocks);

  if (nthreads <= 1) {
    for (uint64_t b = 0; b < nblocks; ++b) {
      uint64_t begin = b * block_size;
      uint64_t end = std::min(total, begin + block_size);
      results[static_cast<size_t>(b)] = fn(b, begin, end);
    }
    return results;
  }

  std::atomic<uint64_t> next{0};
  std::vector<std::thread> pool;
  pool.reserve(nthreads);
  for (unsigned t = 0; t < nthreads; ++t) {
    pool.emplace_back([&]() {
      for (;;) {
        uint64_t b = next.fetch_add(1);
        if (b >= nblocks) break;
        uint64_t begin = b * block_size;
        uint64_t end = std::min(total, begin + block_size);
        results[static_cast<size_t>(b)] = fn(b, begin, end);
      }
    });
  }
  for (auto& th : pool) th.join();
  return results;
}

}  // namespace ffinc
