#include "biregular/parallel.hpp"

#include <algorithm>

namespace biregular {

namespace {

std::atomic<int>& configured() {
  static std::atomic<int> workers{std::max(1, static_cast<int>(std::thread::hardware_concurrency()))};
  return workers;
}

}  // namespace

int worker_count() { return configured().load(); }

void set_worker_count(int workers) { configured() = std::max(1, workers); }

namespace detail {

bool& inside_worker() {
  thread_local bool flag = false;
  return flag;
}

}  // namespace detail

}  // namespace biregular
