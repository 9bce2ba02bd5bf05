// Copyright 2026 The zoegd Authors
// SPDX-License-Identifier: Apache-2.0
#include "parallel.hpp"

#include <algorithm>
#include <cstdlib>
#include <exception>
#include <mutex>
#include <thread>
#include <vector>

namespace zoegd {

int max_worker_threads() {
  int hw = static_cast<int>(std::thread::hardware_concurrency());
  if (hw < 1) hw = 1;
  if (const char* env = std::getenv("ZOEGD_THREADS")) {
    const long cap = std::strtol(env, nullptr, 10);
    if (cap >= 1) hw = std::min<long>(hw, cap);
  }
  return hw;
}

void parallel_blocks(std::size_t n, const std::function<void(std::size_t, std::size_t)>& fn,
                     std::size_t grain) {
  if (n == 0) return;
  if (grain < 1) grain = 1;
  const std::size_t by_grain = (n + grain - 1) / grain;
  const std::size_t workers =
      std::min({static_cast<std::size_t>(max_worker_threads()), n, by_grain});
  if (workers <= 1) {
    fn(0, n);
    return;
  }

  std::exception_ptr first_error;
  std::mutex error_mutex;
  std::vector<std::thread> pool;
  pool.reserve(workers);
  const std::size_t block = (n + workers - 1) / workers;
  for (std::size_t w = 0; w < workers; ++w) {
    const std::size_t begin = w * block;
    const std::size_t end = std::min(n, begin + block);
    if (begin >= end) break;
    pool.emplace_back([&, begin, end] {
      try {
        fn(begin, end);
      } catch (...) {
        std::lock_guard<std::mutex> lock(error_mutex);
        if (!first_error) first_error = std::current_exception();
      }
    });
  }
  for (auto& t : pool) t.join();
  if (first_error) std::rethrow_exception(first_error);
}

}  // namespace zoegd
