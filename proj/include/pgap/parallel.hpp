#pragma once

#include <algorithm>
#include <cstddef>
#include <exception>
#include <thread>
#include <vector>

namespace pgap {

/// Runs fn(chunk_index, begin, end) over [0, count) split into contiguous
/// chunks, one per worker. Chunk results are merged by the caller in chunk
/// order, which keeps outputs independent of the job count.
template <typename Fn>
void parallel_chunks(std::size_t count, unsigned jobs, Fn&& fn) {
  jobs = std::max(1u, jobs);
  if (jobs == 1 || count < 2) {
    fn(std::size_t{0}, std::size_t{0}, count);
    return;
  }
  const std::size_t chunks = std::min<std::size_t>(jobs, count);
  std::vector<std::thread> workers;
  std::vector<std::exception_ptr> errors(chunks);
  for (std::size_t c = 0; c < chunks; ++c) {
    const std::size_t begin = count * c / chunks;
    const std::size_t end = count * (c + 1) / chunks;
    workers.emplace_back([&, c, begin, end] {
      try {
        fn(c, begin, end);
      } catch (...) {
        errors[c] = std::current_exception();
      }
    });
  }
  for (auto& w : workers) w.join();
  for (auto& e : errors)
    if (e) std::rethrow_exception(e);
}

inline std::size_t chunk_count(std::size_t count, unsigned jobs) {
  return std::max<std::size_t>(1, std::min<std::size_t>(std::max(1u, jobs), count));
}

}  // namespace pgap
