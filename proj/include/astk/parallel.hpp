#pragma once

#include <atomic>
#include <cstddef>
#include <thread>
#include <vector>

namespace astk {

// Runs fn(block_index, begin, end) over fixed-size blocks of [0, n).
// Blocks are a deterministic partition independent of the worker count, so
// callers that reduce per-block results in block order get bit-stable output
// for any number of jobs.
template <typename Fn>
void for_each_block(std::size_t n, std::size_t block_size, int jobs, Fn&& fn) {
  const std::size_t n_blocks = (n + block_size - 1) / block_size;
  if (jobs <= 1 || n_blocks <= 1) {
    for (std::size_t b = 0; b < n_blocks; ++b)
      fn(b, b * block_size, std::min(n, (b + 1) * block_size));
    return;
  }
  std::atomic<std::size_t> next{0};
  auto worker = [&] {
    for (;;) {
      std::size_t b = next.fetch_add(1);
      if (b >= n_blocks) return;
      fn(b, b * block_size, std::min(n, (b + 1) * block_size));
    }
  };
  std::vector<std::thread> pool;
  std::size_t n_workers = std::min<std::size_t>(jobs, n_blocks);
  pool.reserve(n_workers);
  for (std::size_t t = 0; t < n_workers; ++t) pool.emplace_back(worker);
  for (auto& t : pool) t.join();
}

}  // namespace astk
