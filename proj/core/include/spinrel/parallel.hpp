// Copyright 2026 The spinrel Authors
// Licensed under the Apache License, Version 2.0 (the "License");
// you may not use this file except in compliance with the License.
// You may obtain a copy of the License at
//
//     http://www.apache.org/licenses/LICENSE-2.0
//
// Unless required by applicable law or agreed to in writing, software
// distributed under the License is distributed on an "AS IS" BASIS,
// WITHOUT WARRANTIES OR CONDITIONS OF ANY KIND, either express or implied.
// See the License for the specific language governing permissions and
// limitations under the License.

#ifndef SPINREL_PARALLEL_HPP_
#define SPINREL_PARALLEL_HPP_

#include <algorithm>
#include <cstddef>
#include <cstdlib>
#include <exception>
#include <functional>
#include <mutex>
#include <string>
#include <thread>
#include <vector>

namespace spinrel {

// Thread count used when a caller passes 0: $SPINREL_THREADS if set and
// positive, otherwise the hardware concurrency.
inline unsigned default_thread_count() {
  if (const char* env = std::getenv("SPINREL_THREADS")) {
    try {
      int n = std::stoi(env);
      if (n > 0) return static_cast<unsigned>(n);
    } catch (...) {
    }
  }
  unsigned hw = std::thread::hardware_concurrency();
  return hw == 0 ? 1 : hw;
}

inline unsigned resolve_threads(unsigned threads) {
  return threads == 0 ? default_thread_count() : threads;
}

// Runs body(i) for i in [begin, end) split into contiguous chunks, one per
// worker. Each index is visited exactly once, so results written by index are
// independent of scheduling. The first exception thrown by any worker is
// rethrown on the calling thread.
inline void parallel_for(std::size_t begin, std::size_t end, unsigned threads,
                         const std::function<void(std::size_t)>& body,
                         std::size_t min_chunk = 1) {
  if (end <= begin) return;
  std::size_t n = end - begin;
  std::size_t workers = std::min<std::size_t>(resolve_threads(threads),
                                              std::max<std::size_t>(1, n / std::max<std::size_t>(1, min_chunk)));
  if (workers <= 1) {
    for (std::size_t i = begin; i < end; ++i) body(i);
    return;
  }
  std::exception_ptr error;
  std::mutex error_mutex;
  std::vector<std::thread> pool;
  pool.reserve(workers);
  std::size_t chunk = (n + workers - 1) / workers;
  for (std::size_t w = 0; w < workers; ++w) {
    std::size_t lo = begin + w * chunk;
    std::size_t hi = std::min(end, lo + chunk);
    if (lo >= hi) break;
    pool.emplace_back([&, lo, hi] {
      try {
        for (std::size_t i = lo; i < hi; ++i) body(i);
      } catch (...) {
        std::lock_guard<std::mutex> lock(error_mutex);
        if (!error) error = std::current_exception();
      }
    });
  }
  for (auto& t : pool) t.join();
  if (error) std::rethrow_exception(error);
}

// Maps fn over [0, n) and returns the results in index order.
template <typename Fn>
auto parallel_map(std::size_t n, unsigned threads, Fn fn)
    -> std::vector<decltype(fn(std::size_t{}))> {
  std::vector<decltype(fn(std::size_t{}))> out(n);
  parallel_for(0, n, threads, [&](std::size_t i) { out[i] = fn(i); });
  return out;
}

}  // namespace spinrel

#endif  // SPINREL_PARALLEL_HPP_
