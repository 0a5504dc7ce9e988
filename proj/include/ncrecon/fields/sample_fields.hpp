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

// Radiance and compensation heads. Both consume the same assembled input
// [x | encoded v | unit SDF normal | geometry feature]; the radiance head
// squashes to [0,1]^3, the compensation head outputs three Euler angles
// capped to [-A, A] by a scaled tanh.

#include "ncrecon/core/vec.hpp"
#include "ncrecon/fields/encoding.hpp"
#include "ncrecon/fields/field_config.hpp"
#include "ncrecon/fields/mlp.hpp"

namespace ncrecon {

template <typename T>
struct DirectionalHead {
  Mlp<T> net;
  int enc_v_dim = 0, feat_dim = 0, in_dim = 0;

  struct Tape {
    MlpTape<T> net;
    std::vector<T> in, in_bar;
  };

  void build(int width, int n_hidden, int pe_v_freqs, int feat, Activation out_act, T beta, T cap,
             uint64_t seed) {
    enc_v_dim = positional_encoding_size(3, pe_v_freqs);
    feat_dim = feat;
    in_dim = 3 + enc_v_dim + 3 + feat;
    net = Mlp<T>(in_dim, width, n_hidden, 3, Activation::softplus, out_act);
    net.beta = beta;
    net.cap = cap;
    Pcg32 rng(seed);
    net.init_random(rng);
  }

  void setup_tape(Tape& tape) const {
    net.setup_tape(tape.net);
    tape.in.resize(in_dim);
    tape.in_bar.resize(in_dim);
  }

  /// enc_v is the precomputed encoding of the (per-ray constant) view
  /// direction; n_hat must be unit length.
  const T* eval(Vec3<T> x, const T* enc_v, Vec3<T> n_hat, const T* fg, Tape& tape) const {
    setup_tape(tape);
    T* in = tape.in.data();
    in[0] = x.x;
    in[1] = x.y;
    in[2] = x.z;
    std::copy(enc_v, enc_v + enc_v_dim, in + 3);
    in[3 + enc_v_dim] = n_hat.x;
    in[4 + enc_v_dim] = n_hat.y;
    in[5 + enc_v_dim] = n_hat.z;
    std::copy(fg, fg + feat_dim, in + 6 + enc_v_dim);
    return net.forward(in, tape.net);
  }

  /// Accumulates parameter grads plus adjoints of n_hat and F_g (x and v
  /// are leaves).
  void backward(Tape& tape, const T* out_bar, MlpGrads<T>& grads, Vec3<T>& nhat_bar,
                T* fg_bar) const {
    net.backward(tape.net, out_bar, grads, tape.in_bar.data());
    const T* ib = tape.in_bar.data();
    nhat_bar.x += ib[3 + enc_v_dim];
    nhat_bar.y += ib[4 + enc_v_dim];
    nhat_bar.z += ib[5 + enc_v_dim];
    if (fg_bar) kernels::axpy(fg_bar, T(1), ib + 6 + enc_v_dim, feat_dim);
  }
};

/// View-dependent radiance c(x, v, n, F_g) in [0,1]^3.
template <typename T>
struct ColorField {
  DirectionalHead<T> head;

  void init(const FieldConfig& cfg, uint64_t seed) {
    head.build(cfg.color_width, cfg.n_hidden, cfg.pe_v_freqs, cfg.feat_dim, Activation::sigmoid,
               T(cfg.softplus_beta), T(1), mix64(seed, 0x636f6c6full));
  }
};

/// Compensation angles (gamma, beta, theta), each in [-cap, cap]. The
/// final layer starts at zero so training begins at the identity rotation.
template <typename T>
struct CompensationField {
  DirectionalHead<T> head;

  void init(const FieldConfig& cfg, uint64_t seed) {
    head.build(cfg.comp_width, cfg.n_hidden, cfg.pe_v_freqs, cfg.feat_dim, Activation::tanh_cap,
               T(cfg.softplus_beta), T(cfg.angle_cap), mix64(seed, 0x636f6d70ull));
    auto& last = head.net.layers.back();
    std::fill(last.w.begin(), last.w.end(), T(0));
    std::fill(last.b.begin(), last.b.end(), T(0));
  }
};

}  // namespace ncrecon
