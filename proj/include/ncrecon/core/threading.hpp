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

#pragma once

#include <cstdint>
#include <functional>

namespace ncrecon {

/// Global worker count used by parallel_for (1 = fully serial).
void set_thread_count(int n);
int thread_count();

/// Static contiguous-chunk parallel loop: fn(begin, end, thread_index).
/// Chunk boundaries depend only on (n, threads), so writes to per-index
/// slots are deterministic for a fixed thread count.
void parallel_for_chunks(int64_t n, const std::function<void(int64_t, int64_t, int)>& fn);

/// Per-index convenience wrapper.
void parallel_for(int64_t n, const std::function<void(int64_t)>& fn);

}  // namespace ncrecon
