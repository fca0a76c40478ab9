// Copyright 2026 The Lance Authors. All rights reserved.
//
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

#pragma once

#include <atomic>
#include <cstdint>
#include <cstdlib>
#include <string>
#include <thread>
#include <vector>

namespace lance {

namespace detail {
inline std::atomic<int> g_max_threads{1};
}

inline int max_threads() {
  return detail::g_max_threads.load(std::memory_order_relaxed);
}

inline void set_max_threads(int n) {
  detail::g_max_threads.store(n < 1 ? 1 : n, std::memory_order_relaxed);
}

// Thread count from LANCE_THREADS, defaulting to 1.
inline int threads_from_env() {
  const char* env = std::getenv("LANCE_THREADS");
  if (env == nullptr) return 1;
  const int n = std::atoi(env);
  return n < 1 ? 1 : n;
}

// Static block split of [0, count). Each index runs exactly once and indices
// within a block run in order, so results of disjoint-write loop bodies do
// not depend on the thread count.
template <typename Fn>
void parallel_for(std::int64_t count, Fn&& fn) {
  const std::int64_t want = max_threads();
  const std::int64_t threads = want < count ? want : count;
  if (threads <= 1) {
    for (std::int64_t i = 0; i < count; ++i) fn(i);
    return;
  }
  const std::int64_t chunk = (count + threads - 1) / threads;
  std::vector<std::thread> workers;
  workers.reserve(std::size_t(threads));
  for (std::int64_t t = 0; t < threads; ++t) {
    const std::int64_t begin = t * chunk;
    const std::int64_t end = begin + chunk < count ? begin + chunk : count;
    if (begin >= end) break;
    workers.emplace_back([begin, end, &fn] {
      for (std::int64_t i = begin; i < end; ++i) fn(i);
    });
  }
  for (auto& w : workers) w.join();
}

}  // namespace lance
