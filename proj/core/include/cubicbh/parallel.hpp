#pragma once

// Deterministic work splitting. Work is cut into blocks whose boundaries do
// not depend on the worker count; workers only decide who computes which
// block, and reductions run over block results in a fixed order.

#include <algorithm>
#include <cstddef>
#include <thread>
#include <utility>
#include <vector>

namespace cubicbh {

// Calls fn(block) for every block in [0, n_blocks), spread over `workers`
// threads by static striding. fn must only write state owned by its block.
template <typename Fn>
void parallel_blocks(std::size_t n_blocks, unsigned workers, Fn&& fn) {
  workers = std::max(1u, workers);
  if (workers == 1 || n_blocks <= 1) {
    for (std::size_t b = 0; b < n_blocks; ++b) fn(b);
    return;
  }
  const unsigned used = static_cast<unsigned>(
      std::min<std::size_t>(workers, n_blocks));
  std::vector<std::thread> pool;
  pool.reserve(used);
  for (unsigned w = 0; w < used; ++w) {
    pool.emplace_back([&, w] {
      for (std::size_t b = w; b < n_blocks; b += used) fn(b);
    });
  }
  for (auto& t : pool) t.join();
}

// Pairwise (fan-in 2) reduction in index order; the association pattern
// depends only on values.size().
template <typename T>
T tree_sum(std::vector<T> values) {
  if (values.empty()) return T{};
  while (values.size() > 1) {
    std::vector<T> next;
    next.reserve((values.size() + 1) / 2);
    for (std::size_t i = 0; i + 1 < values.size(); i += 2) {
      next.push_back(values[i] + values[i + 1]);
    }
    if (values.size() % 2 == 1) next.push_back(values.back());
    values = std::move(next);
  }
  return values.front();
}

}  // namespace cubicbh
