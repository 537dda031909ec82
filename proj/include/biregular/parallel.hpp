#pragma once

#include <algorithm>
#include <atomic>
#include <cstddef>
#include <exception>
#include <mutex>
#include <optional>
#include <thread>
#include <vector>

namespace biregular {

// Process-wide worker count. Defaults to the hardware concurrency.
int worker_count();
void set_worker_count(int workers);

namespace detail {
// True on threads spawned by parallel_map; nested calls run inline.
bool& inside_worker();
}  // namespace detail

// results[i] = f(i) for i in [0, count). Work is pulled from a shared
// counter, results land at their index, so the output does not depend on
// scheduling. The first exception thrown by any f(i) (lowest index wins) is
// rethrown after all workers stop.
template <class F>
auto parallel_map(std::size_t count, F&& f) -> std::vector<decltype(f(std::size_t{}))> {
  using T = decltype(f(std::size_t{}));
  std::vector<std::optional<T>> slots(count);
  const std::size_t workers =
      detail::inside_worker() ? 1 : std::min<std::size_t>(static_cast<std::size_t>(worker_count()), count);

  if (workers <= 1) {
    std::vector<T> out;
    out.reserve(count);
    for (std::size_t i = 0; i < count; ++i) out.push_back(f(i));
    return out;
  }

  std::atomic<std::size_t> next{0};
  std::atomic<bool> stop{false};
  std::mutex err_mu;
  std::exception_ptr err;
  std::size_t err_index = count;

  auto body = [&] {
    detail::inside_worker() = true;
    for (;;) {
      if (stop.load(std::memory_order_relaxed)) break;
      const std::size_t i = next.fetch_add(1);
      if (i >= count) break;
      try {
        slots[i].emplace(f(i));
      } catch (...) {
        std::lock_guard<std::mutex> lock(err_mu);
        if (i < err_index) {
          err_index = i;
          err = std::current_exception();
        }
        stop = true;
      }
    }
    detail::inside_worker() = false;
  };

  std::vector<std::thread> pool;
  pool.reserve(workers - 1);
  for (std::size_t w = 1; w < workers; ++w) pool.emplace_back(body);
  const bool was_inside = detail::inside_worker();
  body();
  detail::inside_worker() = was_inside;
  for (auto& t : pool) t.join();
  if (err) std::rethrow_exception(err);

  std::vector<T> out;
  out.reserve(count);
  for (auto& s : slots) out.push_back(std::move(*s));
  return out;
}

}  // namespace biregular
