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

#include <algorithm>
#include <functional>
#include <vector>

#include "ncrecon/core/rng.hpp"
#include "ncrecon/render/volume.hpp"

namespace ncrecon {

/// One stratified sample per stratum of [near, far); strictly increasing.
template <typename T>
void stratified_samples(T near, T far, int n, Pcg32& rng, std::vector<T>& out) {
  out.resize(n);
  T span = (far - near) / T(n);
  for (int i = 0; i < n; i++) out[i] = near + span * (T(i) + T(rng.next_double()));
}

/// Inverse-CDF draws from a piecewise-constant pdf over the bins between
/// consecutive t values (bin weight = w[i] over [t[i], t[i+1]]).
template <typename T>
void importance_resample(const std::vector<T>& t, const std::vector<T>& w, int n_new, Pcg32& rng,
                         std::vector<T>& out) {
  const int bins = int(t.size()) - 1;
  out.clear();
  if (bins < 1 || n_new <= 0) return;
  std::vector<T> cdf(bins + 1, T(0));
  for (int i = 0; i < bins; i++) cdf[i + 1] = cdf[i] + std::max(w[i], T(1e-5));
  T total = cdf.back();
  for (int i = 0; i <= bins; i++) cdf[i] /= total;
  for (int i = 0; i < n_new; i++) {
    T u = (T(i) + T(rng.next_double())) / T(n_new);
    int b = int(std::upper_bound(cdf.begin(), cdf.end(), u) - cdf.begin()) - 1;
    b = std::clamp(b, 0, bins - 1);
    T denom = cdf[b + 1] - cdf[b];
    T frac = denom > T(0) ? (u - cdf[b]) / denom : T(0.5);
    out.push_back(t[b] + frac * (t[b + 1] - t[b]));
  }
}

/// Stratified coverage plus NeuS-style hierarchical refinement rounds.
/// sdf_at(t) evaluates the current geometry (treated as detached). The
/// refinement rounds sharpen a fixed logistic schedule, independent of the
/// learned tau. Output is merged and strictly increasing.
template <typename T>
std::vector<T> sample_points(T near, T far, int n_uniform, int n_importance, int rounds,
                             Pcg32& rng, const std::function<T(T)>& sdf_at) {
  std::vector<T> t;
  stratified_samples(near, far, n_uniform, rng, t);
  if (n_importance > 0 && rounds > 0) {
    int per_round = n_importance / rounds;
    std::vector<T> s(t.size()), alphas, weights, trans, extra;
    for (int round = 0; round < rounds; round++) {
      int n = int(t.size());
      s.resize(n);
      for (int i = 0; i < n; i++) s[i] = sdf_at(t[i]);
      T tau_round = T(64) * T(1 << round);
      alphas.assign(n, T(0));
      for (int i = 0; i + 1 < n; i++) alphas[i] = alpha_from_sdf(s[i], s[i + 1], tau_round);
      weights.resize(n);
      trans.resize(n);
      weights_from_alphas(alphas.data(), n, weights.data(), trans.data());
      int want = round + 1 == rounds ? n_importance - per_round * (rounds - 1) : per_round;
      importance_resample(t, weights, want, rng, extra);
      t.insert(t.end(), extra.begin(), extra.end());
      std::sort(t.begin(), t.end());
    }
  }
  // enforce strict monotonicity after merging
  for (size_t i = 1; i < t.size(); i++)
    if (t[i] <= t[i - 1]) t[i] = t[i - 1] + T(1e-6);
  return t;
}

}  // namespace ncrecon
