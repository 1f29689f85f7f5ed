#pragma once
// Deterministic fork/join over an index range. Results are stored by index, so
// the output never depends on scheduling. LIEFORGE_THREADS bounds the worker
// count (default: hardware concurrency).

#include <cstddef>
#include <exception>
#include <optional>
#include <thread>
#include <vector>

namespace lieforge {

// Worker count from LIEFORGE_THREADS; throws InvalidArgument on a malformed value.
std::size_t thread_count();

template <class T, class F>
std::vector<T> parallel_map(std::size_t n, F&& f) {
  std::vector<std::optional<T>> slots(n);
  std::vector<std::exception_ptr> errors(n);
  const std::size_t workers = std::min(thread_count(), n);
  auto run = [&](std::size_t w) {
    for (std::size_t i = w; i < n; i += workers) {
      try {
        slots[i].emplace(f(i));
      } catch (...) {
        errors[i] = std::current_exception();
      }
    }
  };
  if (workers <= 1) {
    for (std::size_t i = 0; i < n; ++i) slots[i].emplace(f(i));
  } else {
    std::vector<std::thread> pool;
    for (std::size_t w = 0; w < workers; ++w) pool.emplace_back(run, w);
    for (auto& t : pool) t.join();
    for (auto& e : errors)
      if (e) std::rethrow_exception(e);
  }
  std::vector<T> out;
  out.reserve(n);
  for (auto& s : slots) out.push_back(std::move(*s));
  return out;
}

}  // namespace lieforge
