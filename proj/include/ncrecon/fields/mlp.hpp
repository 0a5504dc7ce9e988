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

// Fully-connected stack with two differentiation paths:
//  - forward/backward: plain reverse mode for parameters and inputs;
//  - forward_jet/backward_jet: the forward pass additionally carries three
//    directional derivatives (tangents) of the output with respect to the
//    spatial input, and the backward pass propagates adjoints of both the
//    values and those tangents. This is what makes losses on the SDF
//    gradient differentiable with respect to the parameters.
//
// Tangent algebra per layer (u = input value, U_k = input tangents):
//   z = W u + b          Z_k = W U_k
//   a = act(z)           A_k = act'(z) . Z_k
// and for adjoints (abar = dL/da, Abar_k = dL/dA_k):
//   zbar   = abar . act'(z) + act''(z) . sum_k Abar_k . Z_k
//   Zbar_k = Abar_k . act'(z)
//   gW    += zbar u^T + sum_k Zbar_k U_k^T,  gb += zbar
//   ubar   = W^T zbar,  Ubar_k = W^T Zbar_k

#include <cmath>
#include <cstdint>
#include <vector>

#include "ncrecon/core/rng.hpp"
#include "ncrecon/kernels/kernels.hpp"

namespace ncrecon {

enum class Activation { linear, softplus, sigmoid, tanh_cap };

template <typename T>
struct Linear {
  int in = 0, out = 0;
  std::vector<T> w, b;

  Linear() = default;
  Linear(int in_, int out_) : in(in_), out(out_), w(size_t(out_) * in_, T(0)), b(out_, T(0)) {}
};

/// Per-point recording of one Mlp evaluation. Node 0 is the input; node l
/// holds activations of layer l. p caches act'(z); Z/A are pre- and
/// post-activation tangents (only filled by the jet path).
template <typename T>
struct MlpTape {
  std::vector<T> a, p, z_tan, a_tan;
  std::vector<int> offset;  // node offsets into a/p; tangent arrays use 3x
  int nodes = 0;

  T* node_a(int n) { return a.data() + offset[n]; }
  const T* node_a(int n) const { return a.data() + offset[n]; }
  T* node_p(int n) { return p.data() + offset[n]; }
  T* node_zt(int n, int k) { return z_tan.data() + 3 * offset[n] + k * width(n); }
  T* node_at(int n, int k) { return a_tan.data() + 3 * offset[n] + k * width(n); }
  const T* node_at(int n, int k) const { return a_tan.data() + 3 * offset[n] + k * width(n); }
  int width(int n) const { return offset[n + 1] - offset[n]; }

  // scratch for backward
  std::vector<T> zbar, zbar_t, ubar, ubar_t;
};

template <typename T>
struct MlpGrads {
  std::vector<std::vector<T>> gw, gb;

  void init(const std::vector<Linear<T>>& layers) {
    gw.resize(layers.size());
    gb.resize(layers.size());
    for (size_t l = 0; l < layers.size(); l++) {
      gw[l].assign(layers[l].w.size(), T(0));
      gb[l].assign(layers[l].b.size(), T(0));
    }
  }
  void zero() {
    for (auto& g : gw) std::fill(g.begin(), g.end(), T(0));
    for (auto& g : gb) std::fill(g.begin(), g.end(), T(0));
  }
  void add(const MlpGrads& o) {
    for (size_t l = 0; l < gw.size(); l++) {
      kernels::axpy(gw[l].data(), T(1), o.gw[l].data(), int(gw[l].size()));
      kernels::axpy(gb[l].data(), T(1), o.gb[l].data(), int(gb[l].size()));
    }
  }
};

template <typename T>
struct Mlp {
  std::vector<Linear<T>> layers;
  Activation hidden_act = Activation::softplus;
  Activation output_act = Activation::linear;
  T beta = T(100);  // softplus sharpness
  T cap = T(1);     // tanh_cap scale

  Mlp() = default;
  Mlp(int in, int width, int n_hidden, int out, Activation hidden, Activation output) {
    hidden_act = hidden;
    output_act = output;
    int prev = in;
    for (int l = 0; l < n_hidden; l++) {
      layers.emplace_back(prev, width);
      prev = width;
    }
    layers.emplace_back(prev, out);
  }

  int input_dim() const { return layers.front().in; }
  int output_dim() const { return layers.back().out; }

  /// He-style fan-out init for hidden stacks (SDF-friendly default).
  void init_random(Pcg32& rng) {
    for (auto& l : layers) {
      T std_dev = std::sqrt(T(2) / T(l.out));
      for (auto& w : l.w) w = T(rng.normal()) * std_dev;
      std::fill(l.b.begin(), l.b.end(), T(0));
    }
  }

  void setup_tape(MlpTape<T>& tape) const {
    const int n_nodes = int(layers.size()) + 1;
    int expected_total = layers[0].in;
    for (const auto& l : layers) expected_total += l.out;
    if (tape.nodes == n_nodes && !tape.offset.empty() && tape.offset[1] == layers[0].in &&
        tape.offset[n_nodes] == expected_total)
      return;
    tape.nodes = n_nodes;
    tape.offset.assign(n_nodes + 1, 0);
    tape.offset[0] = 0;
    tape.offset[1] = layers[0].in;
    for (size_t l = 0; l < layers.size(); l++) tape.offset[l + 2] = tape.offset[l + 1] + layers[l].out;
    int total = tape.offset[n_nodes];
    tape.a.assign(total, T(0));
    tape.p.assign(total, T(0));
    tape.z_tan.assign(size_t(total) * 3, T(0));
    tape.a_tan.assign(size_t(total) * 3, T(0));
    int maxw = 0;
    for (const auto& l : layers) maxw = std::max(maxw, std::max(l.in, l.out));
    tape.zbar.assign(maxw, T(0));
    tape.zbar_t.assign(size_t(maxw) * 3, T(0));
    tape.ubar.assign(maxw, T(0));
    tape.ubar_t.assign(size_t(maxw) * 3, T(0));
  }

  Activation act_of(size_t l) const { return l + 1 == layers.size() ? output_act : hidden_act; }

  // act(z) in place over tape node n; fills a and p = act'(z).
  void apply_activation(Activation act, const T* z, T* a, T* p, int n) const {
    switch (act) {
      case Activation::linear:
        for (int i = 0; i < n; i++) {
          a[i] = z[i];
          p[i] = T(1);
        }
        break;
      case Activation::softplus:
        kernels::softplus_sig(z, beta, a, p, n);
        break;
      case Activation::sigmoid:
        kernels::sigmoid(z, a, n);
        for (int i = 0; i < n; i++) p[i] = a[i] * (T(1) - a[i]);
        break;
      case Activation::tanh_cap:
        for (int i = 0; i < n; i++) {
          T t = std::tanh(z[i]);
          a[i] = cap * t;
          p[i] = cap * (T(1) - t * t);
        }
        break;
    }
  }

  // act''(z) from cached act'(z) (and a where needed)
  T act_second(Activation act, T a, T p) const {
    switch (act) {
      case Activation::linear: return T(0);
      case Activation::softplus: return beta * p * (T(1) - p);       // p = sigmoid(beta z)
      case Activation::sigmoid: return p * (T(1) - T(2) * a);        // a = sigmoid(z)
      case Activation::tanh_cap: {
        T t = a / cap;
        return T(-2) * cap * t * (T(1) - t * t);
      }
    }
    return T(0);
  }

  /// Plain forward. Returns pointer to the output node inside the tape.
  const T* forward(const T* x, MlpTape<T>& tape) const {
    setup_tape(tape);
    std::copy(x, x + layers[0].in, tape.node_a(0));
    for (size_t l = 0; l < layers.size(); l++) {
      const auto& lin = layers[l];
      T* z = tape.node_p(int(l) + 1);  // reuse p storage for z, overwritten below
      kernels::matvec(lin.w.data(), tape.node_a(int(l)), lin.b.data(), z, lin.out, lin.in);
      apply_activation(act_of(l), z, tape.node_a(int(l) + 1), tape.node_p(int(l) + 1), lin.out);
    }
    return tape.node_a(tape.nodes - 1);
  }

  /// Forward carrying three input tangents (row-major 3 x in).
  const T* forward_jet(const T* x, const T* x_tan, MlpTape<T>& tape) const {
    setup_tape(tape);
    std::copy(x, x + layers[0].in, tape.node_a(0));
    for (int k = 0; k < 3; k++)
      std::copy(x_tan + k * layers[0].in, x_tan + (k + 1) * layers[0].in, tape.node_at(0, k));
    std::vector<T>& zbuf = tape.zbar;  // scratch
    for (size_t l = 0; l < layers.size(); l++) {
      const auto& lin = layers[l];
      int n = int(l);
      T* z = zbuf.data();
      kernels::matvec(lin.w.data(), tape.node_a(n), lin.b.data(), z, lin.out, lin.in);
      for (int k = 0; k < 3; k++)
        kernels::matvec(lin.w.data(), tape.node_at(n, k), nullptr, tape.node_zt(n + 1, k), lin.out,
                        lin.in);
      apply_activation(act_of(l), z, tape.node_a(n + 1), tape.node_p(n + 1), lin.out);
      const T* p = tape.node_p(n + 1);
      for (int k = 0; k < 3; k++) {
        const T* zt = tape.node_zt(n + 1, k);
        T* at = tape.node_at(n + 1, k);
        for (int i = 0; i < lin.out; i++) at[i] = p[i] * zt[i];
      }
    }
    return tape.node_a(tape.nodes - 1);
  }

  /// Reverse pass for the plain forward. Accumulates parameter gradients
  /// into g; writes dL/dinput into xbar when non-null (overwrites).
  void backward(MlpTape<T>& tape, const T* out_bar, MlpGrads<T>& g, T* xbar) const {
    int L = int(layers.size());
    T* abar = tape.ubar.data();
    std::copy(out_bar, out_bar + layers.back().out, abar);
    for (int l = L - 1; l >= 0; l--) {
      const auto& lin = layers[l];
      const T* p = tape.node_p(l + 1);
      T* zbar = tape.zbar.data();
      for (int i = 0; i < lin.out; i++) zbar[i] = abar[i] * p[i];
      kernels::outer_acc(g.gw[l].data(), zbar, tape.node_a(l), lin.out, lin.in);
      kernels::axpy(g.gb[l].data(), T(1), zbar, lin.out);
      if (l > 0 || xbar) {
        T* dst = l > 0 ? abar : xbar;
        std::fill(dst, dst + lin.in, T(0));
        kernels::matvec_t_acc(lin.w.data(), zbar, dst, lin.out, lin.in);
      }
    }
  }

  /// Reverse pass for forward_jet. out_bar_tan: adjoints of the output
  /// tangents (3 x out, may be null for all-zero). xbar/xbar_tan receive
  /// input adjoints when non-null (overwritten).
  void backward_jet(MlpTape<T>& tape, const T* out_bar, const T* out_bar_tan, MlpGrads<T>& g,
                    T* xbar, T* xbar_tan) const {
    int L = int(layers.size());
    const int out_dim = layers.back().out;

    T* abar = tape.ubar.data();
    T* Abar = tape.ubar_t.data();  // 3 rows, stride = current node width
    std::copy(out_bar, out_bar + out_dim, abar);
    if (out_bar_tan)
      std::copy(out_bar_tan, out_bar_tan + 3 * out_dim, Abar);
    else
      std::fill(Abar, Abar + 3 * out_dim, T(0));

    for (int l = L - 1; l >= 0; l--) {
      const auto& lin = layers[l];
      const Activation act = act_of(size_t(l));
      const T* p = tape.node_p(l + 1);
      const T* a = tape.node_a(l + 1);
      T* zbar = tape.zbar.data();
      T* Zbar = tape.zbar_t.data();

      // zbar = abar.p + act''(z) . sum_k Abar_k . Z_k
      for (int i = 0; i < lin.out; i++) {
        T tan_term = T(0);
        for (int k = 0; k < 3; k++)
          tan_term += Abar[k * lin.out + i] * tape.node_zt(l + 1, k)[i];
        zbar[i] = abar[i] * p[i] + act_second(act, a[i], p[i]) * tan_term;
      }
      // Zbar copies Abar before Abar is reused for the next (input) node
      for (int k = 0; k < 3; k++) {
        const T* Ab = Abar + k * lin.out;
        T* Zb = Zbar + k * lin.out;
        for (int i = 0; i < lin.out; i++) Zb[i] = Ab[i] * p[i];
      }

      kernels::outer_acc(g.gw[l].data(), zbar, tape.node_a(l), lin.out, lin.in);
      for (int k = 0; k < 3; k++)
        kernels::outer_acc(g.gw[l].data(), Zbar + k * lin.out, tape.node_at(l, k), lin.out, lin.in);
      kernels::axpy(g.gb[l].data(), T(1), zbar, lin.out);

      if (l > 0 || xbar) {
        T* ub = l > 0 ? abar : xbar;
        std::fill(ub, ub + lin.in, T(0));
        kernels::matvec_t_acc(lin.w.data(), zbar, ub, lin.out, lin.in);
      }
      if (l > 0 || xbar_tan) {
        for (int k = 0; k < 3; k++) {
          T* Ub = l > 0 ? Abar + k * lin.in : xbar_tan + k * lin.in;
          std::fill(Ub, Ub + lin.in, T(0));
          kernels::matvec_t_acc(lin.w.data(), Zbar + k * lin.out, Ub, lin.out, lin.in);
        }
      }
    }
  }

  size_t param_count() const {
    size_t n = 0;
    for (const auto& l : layers) n += l.w.size() + l.b.size();
    return n;
  }
};

}  // namespace ncrecon
