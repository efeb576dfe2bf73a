#include "wildtorus/threads.hpp"

#include <atomic>
#include <cstdlib>
#include <thread>
#include <vector>

namespace wildtorus {

int thread_budget() {
  int n = int(std::thread::hardware_concurrency());
  if (n < 1) n = 1;
  if (const char* env = std::getenv("WILDTORUS_THREADS")) {
    int cap = std::atoi(env);
    if (cap >= 1 && cap < n) n = cap;
  }
  return n;
}

void parallel_for(size_t n, const std::function<void(size_t)>& fn) {
  int workers = thread_budget();
  if (n == 0) return;
  if (workers == 1 || n == 1) {
    for (size_t i = 0; i < n; ++i) fn(i);
    return;
  }
  std::atomic<size_t> next{0};
  auto body = [&] {
    for (;;) {
      size_t i = next.fetch_add(1);
      if (i >= n) return;
      fn(i);
    }
  };
  std::vector<std::thread> pool;
  int k = std::min<size_t>(workers, n);
  pool.reserve(k);
  for (int t = 0; t < k - 1; ++t) pool.emplace_back(body);
  body();
  for (auto& th : pool) th.join();
}

} // namespace wildtorus
