#pragma once

#include <algorithm>
#include <cstddef>
#include <thread>
#include <vector>

namespace stokes {

// Runs body(i) for i in [0, count) on up to `threads` workers, each owning a
// contiguous block. Callers write to disjoint slots, so results do not depend
// on the thread count.
template <typename Body>
void parallel_for(std::size_t count, unsigned threads, Body&& body) {
  const std::size_t workers = std::clamp<std::size_t>(threads, 1, std::max<std::size_t>(count, 1));
  if (workers == 1) {
    for (std::size_t i = 0; i < count; ++i) body(i);
    return;
  }
  std::vector<std::jthread> pool;
  pool.reserve(workers);
  const std::size_t chunk = (count + workers - 1) / workers;
  for (std::size_t w = 0; w < workers; ++w) {
    const std::size_t begin = w * chunk;
    const std::size_t end = std::min(count, begin + chunk);
    if (begin >= end) break;
    pool.emplace_back([begin, end, &body] {
      for (std::size_t i = begin; i < end; ++i) body(i);
    });
  }
}

}  // namespace stokes
