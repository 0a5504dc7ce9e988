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

#include "ncrecon/core/vec.hpp"
#include "ncrecon/fields/encoding.hpp"
#include "ncrecon/fields/field_config.hpp"
#include "ncrecon/fields/grid.hpp"
#include "ncrecon/fields/mlp.hpp"

namespace ncrecon {

/// Hybrid SDF model: a smooth MLP branch over encoded positions fused with
/// multi-resolution grid features, decoded to (signed distance, geometry
/// feature). The jet path carries spatial tangents end to end, so the SDF
/// normal is the exact derivative of the evaluated field.
template <typename T>
struct HybridGeometryField {
  FieldConfig cfg;
  Mlp<T> smooth;
  Mlp<T> decoder;
  MultiResGrid<T> grid;
  int enc_dim = 0;
  int grid_dim = 0;
  int decoder_in = 0;

  struct Tape {
    MlpTape<T> smooth, decoder;
    std::vector<T> enc, enc_tan;
    std::vector<T> grid_f, grid_tan;
    std::vector<T> dec_in, dec_in_tan;
    typename MultiResGrid<T>::CellCache cells;
    // outputs of the last eval
    T s = 0;
    Vec3<T> n;
    const T* fg = nullptr;
    // backward scratch
    std::vector<T> out_bar, out_tan_bar, in_bar, in_tan_bar, smooth_bar, smooth_tan_bar,
        grid_bar, grid_tan_bar;
  };

  struct Grads {
    MlpGrads<T> smooth, decoder;
    void init(const HybridGeometryField& f) {
      smooth.init(f.smooth.layers);
      decoder.init(f.decoder.layers);
    }
    void zero() {
      smooth.zero();
      decoder.zero();
    }
    void add(const Grads& o) {
      smooth.add(o.smooth);
      decoder.add(o.decoder);
    }
  };

  void init(const FieldConfig& config, uint64_t seed) {
    cfg = config;
    enc_dim = positional_encoding_size(3, cfg.pe_x_freqs);
    if (cfg.use_grid) {
      grid.init(cfg.grid);
      grid_dim = grid.feature_dim();
    } else {
      grid.levels.clear();
      grid.cfg = cfg.grid;
      grid_dim = 0;
    }
    smooth = Mlp<T>(enc_dim, cfg.smooth_width, cfg.n_hidden - 1, cfg.smooth_width,
                    Activation::softplus, Activation::softplus);
    smooth.beta = T(cfg.softplus_beta);
    decoder_in = cfg.smooth_width + grid_dim;
    decoder = Mlp<T>(decoder_in, cfg.decoder_width, cfg.n_hidden, 1 + cfg.feat_dim,
                     Activation::softplus, Activation::linear);
    decoder.beta = T(cfg.softplus_beta);
    geometric_init(seed);
  }

  /// Sphere-like start: fan-out scaled hidden weights, zeroed encoding
  /// columns in the first layer, and a final s-row biased to radius r.
  /// An affine recalibration of the s row pins s(0) = -r and makes the
  /// cube corners land at their exact sphere distance, which keeps the
  /// init reliable at small widths.
  void geometric_init(uint64_t seed) {
    Pcg32 rng(mix64(seed, 0x67656f6dull));
    smooth.init_random(rng);
    decoder.init_random(rng);

    // first smooth layer: keep identity-x columns, silence the sin/cos part
    auto& first = smooth.layers[0];
    for (int r = 0; r < first.out; r++)
      for (int c = 3; c < first.in; c++) first.w[size_t(r) * first.in + c] = T(0);

    // final decoder layer: geometric init on the signed-distance row
    auto& last = decoder.layers.back();
    T mean = std::sqrt(T(M_PI)) / std::sqrt(T(last.in));
    for (int c = 0; c < last.in; c++)
      last.w[c] = mean + T(rng.normal()) * T(1e-4);
    last.b[0] = T(0);

    Tape tape;
    const T r = T(cfg.sphere_init_radius);
    T m_center = eval({0, 0, 0}, tape);
    T m_corner = std::numeric_limits<T>::max();
    for (int c = 0; c < 8; c++) {
      Vec3<T> corner{c & 1 ? T(1) : T(-1), c & 2 ? T(1) : T(-1), c & 4 ? T(1) : T(-1)};
      m_corner = std::min(m_corner, eval(corner, tape));
    }
    T target_center = -r;
    T target_corner = std::sqrt(T(3)) - r;
    T alpha = (m_corner - m_center) > T(1e-3)
                  ? (target_corner - target_center) / (m_corner - m_center)
                  : T(1);
    T delta = target_center - alpha * m_center;
    for (int c = 0; c < last.in; c++) last.w[c] *= alpha;
    last.b[0] = alpha * last.b[0] + delta;
  }

  void setup_tape(Tape& tape) const {
    smooth.setup_tape(tape.smooth);
    decoder.setup_tape(tape.decoder);
    tape.enc.resize(enc_dim);
    tape.enc_tan.resize(size_t(enc_dim) * 3);
    tape.grid_f.resize(grid_dim);
    tape.grid_tan.resize(size_t(grid_dim) * 3);
    tape.dec_in.resize(decoder_in);
    tape.dec_in_tan.resize(size_t(decoder_in) * 3);
    tape.out_bar.resize(1 + cfg.feat_dim);
    tape.out_tan_bar.resize(size_t(1 + cfg.feat_dim) * 3);
    tape.in_bar.resize(decoder_in);
    tape.in_tan_bar.resize(size_t(decoder_in) * 3);
    tape.smooth_bar.resize(cfg.smooth_width);
    tape.smooth_tan_bar.resize(size_t(cfg.smooth_width) * 3);
    tape.grid_bar.resize(grid_dim);
    tape.grid_tan_bar.resize(size_t(grid_dim) * 3);
  }

  /// Value-only evaluation (importance sampling, meshing).
  T eval(Vec3<T> x, Tape& tape) const {
    setup_tape(tape);
    T xv[3] = {x.x, x.y, x.z};
    positional_encoding(xv, 3, cfg.pe_x_freqs, tape.enc.data());
    const T* fs = smooth.forward(tape.enc.data(), tape.smooth);
    std::copy(fs, fs + cfg.smooth_width, tape.dec_in.data());
    if (grid_dim > 0) {
      grid.interp(xv, tape.grid_f.data());
      std::copy(tape.grid_f.begin(), tape.grid_f.end(), tape.dec_in.data() + cfg.smooth_width);
    }
    const T* out = decoder.forward(tape.dec_in.data(), tape.decoder);
    tape.s = out[0];
    tape.fg = out + 1;
    return out[0];
  }

  /// Jet evaluation: signed distance, geometry feature, and the SDF normal
  /// (raw gradient, not normalized).
  void eval_jet(Vec3<T> x, Tape& tape) const {
    setup_tape(tape);
    T xv[3] = {x.x, x.y, x.z};
    T x_tan[9] = {1, 0, 0, 0, 1, 0, 0, 0, 1};  // identity: d x / d x_k
    positional_encoding_jet(xv, x_tan, 3, cfg.pe_x_freqs, tape.enc.data(), tape.enc_tan.data());
    const T* fs = smooth.forward_jet(tape.enc.data(), tape.enc_tan.data(), tape.smooth);

    std::copy(fs, fs + cfg.smooth_width, tape.dec_in.data());
    for (int k = 0; k < 3; k++)
      std::copy(tape.smooth.node_at(tape.smooth.nodes - 1, k),
                tape.smooth.node_at(tape.smooth.nodes - 1, k) + cfg.smooth_width,
                tape.dec_in_tan.data() + size_t(k) * decoder_in);
    if (grid_dim > 0) {
      grid.interp_jet(xv, tape.grid_f.data(), tape.grid_tan.data(), tape.cells);
      std::copy(tape.grid_f.begin(), tape.grid_f.end(), tape.dec_in.data() + cfg.smooth_width);
      for (int k = 0; k < 3; k++)
        std::copy(tape.grid_tan.begin() + size_t(k) * grid_dim,
                  tape.grid_tan.begin() + size_t(k + 1) * grid_dim,
                  tape.dec_in_tan.data() + size_t(k) * decoder_in + cfg.smooth_width);
    }

    const T* out = decoder.forward_jet(tape.dec_in.data(), tape.dec_in_tan.data(), tape.decoder);
    tape.s = out[0];
    tape.fg = out + 1;
    const int out_dim = 1 + cfg.feat_dim;
    tape.n = {tape.decoder.node_at(tape.decoder.nodes - 1, 0)[0],
              tape.decoder.node_at(tape.decoder.nodes - 1, 1)[0],
              tape.decoder.node_at(tape.decoder.nodes - 1, 2)[0]};
    (void)out_dim;
  }

  /// Reverse pass for eval_jet. fg_bar may be null; contribs receives
  /// grid.contrib_count() corner gradients when the grid branch is active.
  void backward_jet(Tape& tape, T s_bar, const T* fg_bar, Vec3<T> n_bar, Grads& grads,
                    GridContrib<T>* contribs) const {
    const int out_dim = 1 + cfg.feat_dim;
    std::fill(tape.out_bar.begin(), tape.out_bar.end(), T(0));
    std::fill(tape.out_tan_bar.begin(), tape.out_tan_bar.end(), T(0));
    tape.out_bar[0] = s_bar;
    if (fg_bar) std::copy(fg_bar, fg_bar + cfg.feat_dim, tape.out_bar.begin() + 1);
    for (int k = 0; k < 3; k++) tape.out_tan_bar[size_t(k) * out_dim] = n_bar[k];

    decoder.backward_jet(tape.decoder, tape.out_bar.data(), tape.out_tan_bar.data(),
                         grads.decoder, tape.in_bar.data(), tape.in_tan_bar.data());

    // split decoder-input adjoints into smooth and grid sections
    std::copy(tape.in_bar.begin(), tape.in_bar.begin() + cfg.smooth_width, tape.smooth_bar.begin());
    for (int k = 0; k < 3; k++)
      std::copy(tape.in_tan_bar.begin() + size_t(k) * decoder_in,
                tape.in_tan_bar.begin() + size_t(k) * decoder_in + cfg.smooth_width,
                tape.smooth_tan_bar.begin() + size_t(k) * cfg.smooth_width);
    smooth.backward_jet(tape.smooth, tape.smooth_bar.data(), tape.smooth_tan_bar.data(),
                        grads.smooth, nullptr, nullptr);

    if (grid_dim > 0 && contribs) {
      std::copy(tape.in_bar.begin() + cfg.smooth_width, tape.in_bar.end(), tape.grid_bar.begin());
      for (int k = 0; k < 3; k++)
        std::copy(tape.in_tan_bar.begin() + size_t(k) * decoder_in + cfg.smooth_width,
                  tape.in_tan_bar.begin() + size_t(k + 1) * decoder_in,
                  tape.grid_tan_bar.begin() + size_t(k) * grid_dim);
      grid.backward(tape.cells, tape.grid_bar.data(), tape.grid_tan_bar.data(), contribs);
    }
  }

  size_t param_count() const {
    size_t n = smooth.param_count() + decoder.param_count();
    for (const auto& l : grid.levels) n += l.data.size();
    return n;
  }
};

}  // namespace ncrecon
