#pragma once

#include <cstddef>
#include <thread>
#include <vector>

namespace exotic::detail {

/// Runs fn(chunk, begin, end) over a contiguous partition of [0, n) into
/// at most `threads` chunks. Chunks are disjoint and ordered, so callers
/// that keep per-chunk buckets and concatenate them in chunk order get
/// results independent of the degree of parallelism.
template <typename Fn>
void parallel_ranges(std::size_t n, int threads, Fn&& fn) {
  if (threads < 1) {
    threads = 1;
  }
  const std::size_t chunks =
      std::min<std::size_t>(static_cast<std::size_t>(threads), n == 0 ? 1 : n);
  if (chunks <= 1) {
    fn(std::size_t{0}, std::size_t{0}, n);
    return;
  }
  std::vector<std::thread> pool;
  pool.reserve(chunks);
  for (std::size_t chunk = 0; chunk < chunks; ++chunk) {
    const std::size_t begin = n * chunk / chunks;
    const std::size_t end = n * (chunk + 1) / chunks;
    pool.emplace_back([&fn, chunk, begin, end] { fn(chunk, begin, end); });
  }
  for (std::thread& worker : pool) {
    worker.join();
  }
}

}  // namespace exotic::detail
