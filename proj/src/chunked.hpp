#pragma once

#include <algorithm>
#include <cstddef>
#include <thread>
#include <vector>

namespace arctan_bounds::detail {

/// Runs body(begin, end) over contiguous chunks of [0, n) on up to
/// hardware_concurrency threads. Results must be merged by the caller.
template <class Body>
void for_each_chunk(std::size_t n, Body&& body) {
  const std::size_t workers =
      std::clamp<std::size_t>(std::thread::hardware_concurrency(), 1, std::max<std::size_t>(n / 256, 1));
  if (workers <= 1) {
    body(std::size_t{0}, n);
    return;
  }
  const std::size_t chunk = (n + workers - 1) / workers;
  std::vector<std::jthread> threads;
  threads.reserve(workers);
  for (std::size_t begin = 0; begin < n; begin += chunk) {
    threads.emplace_back([&body, begin, end = std::min(n, begin + chunk)] { body(begin, end); });
  }
}

}  // namespace arctan_bounds::detail
