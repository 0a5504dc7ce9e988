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

// Opaque density from consecutive SDF samples and transmittance-weighted
// compositing, with closed-form adjoints for both.

#include <cmath>
#include <stdexcept>
#include <vector>

#include "ncrecon/core/image.hpp"
#include "ncrecon/core/vec.hpp"

namespace ncrecon {

namespace detail {
template <typename T>
T softplus_stable(T u) {
  return u > T(0) ? u + std::log1p(std::exp(-u)) : std::log1p(std::exp(u));
}
}  // namespace detail

/// alpha = max((Phi(s_i) - Phi(s_next)) / Phi(s_i), 0) with the logistic
/// Phi_tau(x) = sigmoid(tau x), evaluated in log space so deeply negative
/// SDF values stay finite.
template <typename T>
T alpha_from_sdf(T s_i, T s_next, T tau) {
  T lr = detail::softplus_stable(-tau * s_i) - detail::softplus_stable(-tau * s_next);
  if (lr >= T(0)) return T(0);  // receding surface clamps to zero
  return -std::expm1(lr);
}

template <typename T>
struct AlphaGrad {
  T alpha = 0;
  T d_si = 0, d_snext = 0, d_tau = 0;
};

template <typename T>
AlphaGrad<T> alpha_from_sdf_grad(T s_i, T s_next, T tau) {
  AlphaGrad<T> g;
  T lr = detail::softplus_stable(-tau * s_i) - detail::softplus_stable(-tau * s_next);
  if (lr >= T(0)) return g;  // clamped: zero value, zero gradient
  T e = std::exp(lr);
  g.alpha = T(1) - e;
  // d softplus(-tau s)/ds = -tau sigmoid(-tau s) = -tau (1 - Phi(s))
  T one_m_phi_i = T(1) / (T(1) + std::exp(tau * s_i));
  T one_m_phi_n = T(1) / (T(1) + std::exp(tau * s_next));
  T dlr_dsi = -tau * one_m_phi_i;
  T dlr_dsn = tau * one_m_phi_n;
  T dlr_dtau = -s_i * one_m_phi_i + s_next * one_m_phi_n;
  g.d_si = -e * dlr_dsi;
  g.d_snext = -e * dlr_dsn;
  g.d_tau = -e * dlr_dtau;
  return g;
}

/// weights w_i = T_i alpha_i with T_1 = 1, T_{i+1} = T_i (1 - alpha_i).
/// Returns the residual transmittance after the last sample.
template <typename T>
T weights_from_alphas(const T* alphas, int n, T* weights, T* trans) {
  T t = T(1);
  for (int i = 0; i < n; i++) {
    if (trans) trans[i] = t;
    weights[i] = t * alphas[i];
    t *= (T(1) - alphas[i]);
  }
  return t;
}

/// sum_i T_i alpha_i value_i for k-dimensional values (row-major n x k).
template <typename T>
void composite(const T* values, const T* alphas, int n, int k, T* out) {
  for (int c = 0; c < k; c++) out[c] = T(0);
  T t = T(1);
  for (int i = 0; i < n; i++) {
    T w = t * alphas[i];
    const T* v = values + size_t(i) * k;
    for (int c = 0; c < k; c++) out[c] += w * v[c];
    t *= (T(1) - alphas[i]);
  }
}

template <typename T>
Vec3<T> composite(const std::vector<Vec3<T>>& values, const std::vector<T>& alphas) {
  if (values.size() != alphas.size())
    throw std::invalid_argument("composite: mismatched lengths");
  Vec3<T> out{0, 0, 0};
  T t = T(1);
  for (size_t i = 0; i < values.size(); i++) {
    out += values[i] * (t * alphas[i]);
    t *= (T(1) - alphas[i]);
  }
  return out;
}

/// Adjoints of the alphas for a composited scalar objective.
/// a[i] = <value_i, out_bar> aggregated over all composited streams and
/// a_end the same product for the background term weighted by the residual
/// transmittance. Division-free suffix recurrence:
///   Q_n = a_end,  Q_j = alpha_{j+1} a_{j+1} + (1 - alpha_{j+1}) Q_{j+1}
///   dL/dalpha_j = T_j (a_j - Q_j)
template <typename T>
void alpha_backward(const T* alphas, const T* trans, int n, const T* a, T a_end, T* alpha_bar) {
  T q = a_end;
  for (int j = n - 1; j >= 0; j--) {
    alpha_bar[j] = trans[j] * (a[j] - q);
    q = alphas[j] * a[j] + (T(1) - alphas[j]) * q;
  }
}

/// Per-pixel L1 over the three channels of two rendered normal maps.
inline ImageF normal_bias_map(const ImageF& n_sdf_map, const ImageF& n_comp_map) {
  if (n_sdf_map.height != n_comp_map.height || n_sdf_map.width != n_comp_map.width ||
      n_sdf_map.channels != 3 || n_comp_map.channels != 3)
    throw std::invalid_argument("normal_bias_map: shape mismatch");
  ImageF out(n_sdf_map.height, n_sdf_map.width, 1);
  for (int r = 0; r < out.height; r++)
    for (int c = 0; c < out.width; c++) {
      float acc = 0;
      for (int ch = 0; ch < 3; ch++)
        acc += std::abs(n_sdf_map.at(r, c, ch) - n_comp_map.at(r, c, ch));
      out.at(r, c, 0) = acc;
    }
  return out;
}

}  // namespace ncrecon
