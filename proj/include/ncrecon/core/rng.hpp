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

#include <cmath>
#include <cstdint>

namespace ncrecon {

/// splitmix64 mixing step; used to derive independent seeds from
/// (seed, stream, counter) tuples so resume never needs RNG state.
inline uint64_t mix64(uint64_t x) {
  x += 0x9e3779b97f4a7c15ull;
  x = (x ^ (x >> 30)) * 0xbf58476d1ce4e5b9ull;
  x = (x ^ (x >> 27)) * 0x94d049bb133111ebull;
  return x ^ (x >> 31);
}

inline uint64_t mix64(uint64_t a, uint64_t b) { return mix64(mix64(a) ^ (b + 0x9e3779b97f4a7c15ull)); }
inline uint64_t mix64(uint64_t a, uint64_t b, uint64_t c) { return mix64(mix64(a, b), c); }

/// pcg32: small deterministic generator, identical output on every platform.
struct Pcg32 {
  uint64_t state = 0x853c49e6748fea9bull;
  uint64_t inc = 0xda3e39cb94b95bdbull;

  Pcg32() = default;
  explicit Pcg32(uint64_t seed, uint64_t seq = 1) {
    state = 0;
    inc = (seq << 1u) | 1u;
    next();
    state += seed;
    next();
  }

  uint32_t next() {
    uint64_t old = state;
    state = old * 6364136223846793005ull + inc;
    uint32_t xorshifted = uint32_t(((old >> 18u) ^ old) >> 27u);
    uint32_t rot = uint32_t(old >> 59u);
    return (xorshifted >> rot) | (xorshifted << ((~rot + 1u) & 31));
  }

  /// Uniform in [0, n). Unbiased via rejection.
  uint32_t next_below(uint32_t n) {
    if (n <= 1) return 0;
    uint32_t threshold = (~n + 1u) % n;
    for (;;) {
      uint32_t r = next();
      if (r >= threshold) return r % n;
    }
  }

  float next_float() { return float(next() >> 8) * (1.0f / 16777216.0f); }        // [0,1)
  double next_double() { return double(next()) * (1.0 / 4294967296.0); }          // [0,1)

  float uniform(float lo, float hi) { return lo + (hi - lo) * next_float(); }
  double uniform(double lo, double hi) { return lo + (hi - lo) * next_double(); }

  /// Standard normal via Box-Muller.
  double normal() {
    double u1 = 0;
    while (u1 <= 1e-12) u1 = next_double();
    double u2 = next_double();
    return std::sqrt(-2.0 * std::log(u1)) * std::cos(6.283185307179586 * u2);
  }
};

}  // namespace ncrecon
