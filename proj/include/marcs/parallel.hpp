#pragma once

#include <algorithm>
#include <cstddef>
#include <exception>
#include <thread>
#include <type_traits>
#include <vector>

namespace marcs {

/// 0 means one worker per hardware thread.
inline unsigned resolve_workers(unsigned requested) {
  if (requested != 0) return requested;
  return std::max(1u, std::thread::hardware_concurrency());
}

/// Runs fn(begin, end) over contiguous chunks of [0, n) and returns the
/// chunk results in order.  Callers reduce in that order, so the output
/// does not depend on the worker count as long as fn is pure.
template <class Fn>
auto map_chunks(std::size_t n, unsigned workers, Fn&& fn) {
  using R = std::invoke_result_t<Fn&, std::size_t, std::size_t>;
  const std::size_t chunks = std::max<std::size_t>(1, std::min<std::size_t>(resolve_workers(workers), n));
  std::vector<R> results(chunks);
  auto bounds = [&](std::size_t i) { return n * i / chunks; };
  if (chunks == 1) {
    results[0] = fn(std::size_t{0}, n);
    return results;
  }
  std::vector<std::exception_ptr> errors(chunks);
  std::vector<std::thread> pool;
  pool.reserve(chunks);
  for (std::size_t i = 0; i < chunks; ++i) {
    pool.emplace_back([&, i] {
      try {
        results[i] = fn(bounds(i), bounds(i + 1));
      } catch (...) {
        errors[i] = std::current_exception();
      }
    });
  }
  for (auto& t : pool) t.join();
  for (auto& e : errors)
    if (e) std::rethrow_exception(e);
  return results;
}

}  // namespace marcs
