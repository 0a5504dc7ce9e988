// Copyright 2026 The ncrecon Authors
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

#include "ncrecon/core/threading.hpp"

#include <algorithm>
#include <atomic>
#include <thread>
#include <vector>

namespace ncrecon {

namespace {
std::atomic<int> g_threads{0};  // 0 = not set yet, default to hardware
}

void set_thread_count(int n) { g_threads.store(std::max(1, n)); }

int thread_count() {
  int n = g_threads.load();
  if (n > 0) return n;
  unsigned hw = std::thread::hardware_concurrency();
  return hw > 0 ? int(hw) : 1;
}

void parallel_for_chunks(int64_t n, const std::function<void(int64_t, int64_t, int)>& fn) {
  if (n <= 0) return;
  int workers = std::min<int64_t>(thread_count(), n);
  if (workers <= 1) {
    fn(0, n, 0);
    return;
  }
  int64_t chunk = (n + workers - 1) / workers;
  std::vector<std::thread> pool;
  pool.reserve(workers - 1);
  for (int t = 1; t < workers; t++) {
    int64_t b = t * chunk, e = std::min(n, b + chunk);
    if (b >= e) break;
    pool.emplace_back([&fn, b, e, t] { fn(b, e, t); });
  }
  fn(0, std::min(n, chunk), 0);
  for (auto& th : pool) th.join();
}

void parallel_for(int64_t n, const std::function<void(int64_t)>& fn) {
  parallel_for_chunks(n, [&fn](int64_t b, int64_t e, int) {
    for (int64_t i = b; i < e; i++) fn(i);
  });
}

}  // namespace ncrecon
