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

namespace ncrecon {

/// Output width of positional_encoding for a d-vector: d * (2*n_freq) + d.
constexpr int positional_encoding_size(int d, int n_freq) { return d * (2 * n_freq) + d; }

/// Frequency encoding: [x, sin(2^k pi x), cos(2^k pi x)]_{k=0..n_freq-1},
/// grouped per octave. n_freq = 0 passes x through.
template <typename T>
void positional_encoding(const T* x, int d, int n_freq, T* out) {
  for (int i = 0; i < d; i++) out[i] = x[i];
  int o = d;
  T freq = T(M_PI);
  for (int k = 0; k < n_freq; k++) {
    for (int i = 0; i < d; i++) out[o + i] = std::sin(freq * x[i]);
    for (int i = 0; i < d; i++) out[o + d + i] = std::cos(freq * x[i]);
    o += 2 * d;
    freq *= T(2);
  }
}

/// Encoding plus tangent propagation. tan_in/tan_out hold 3 directional
/// derivative rows, row-major [k * width + i].
template <typename T>
void positional_encoding_jet(const T* x, const T* tan_in, int d, int n_freq, T* out, T* tan_out) {
  positional_encoding(x, d, n_freq, out);
  const int width = positional_encoding_size(d, n_freq);
  for (int k = 0; k < 3; k++) {
    T* row = tan_out + k * width;
    const T* tin = tan_in + k * d;
    for (int i = 0; i < d; i++) row[i] = tin[i];
    int o = d;
    T freq = T(M_PI);
    for (int f = 0; f < n_freq; f++) {
      for (int i = 0; i < d; i++) row[o + i] = freq * std::cos(freq * x[i]) * tin[i];
      for (int i = 0; i < d; i++) row[o + d + i] = -freq * std::sin(freq * x[i]) * tin[i];
      o += 2 * d;
      freq *= T(2);
    }
  }
}

}  // namespace ncrecon
