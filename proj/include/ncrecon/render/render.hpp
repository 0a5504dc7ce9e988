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

// Differentiable volume rendering over the learned fields. The forward
// pass records per-sample tapes; render_pixel_backward turns pixel-level
// adjoints (plus per-sample eikonal adjoints) into parameter gradients.
// Stage 1 bypasses the compensation field entirely (n_comp == n_sdf).

#include <vector>

#include "ncrecon/fields/model.hpp"
#include "ncrecon/fields/rotation.hpp"
#include "ncrecon/render/ray.hpp"
#include "ncrecon/render/sampling.hpp"
#include "ncrecon/render/volume.hpp"

namespace ncrecon {

struct RenderOptions {
  int n_uniform = 64;
  int n_importance = 32;
  int importance_rounds = 2;
};

/// Ordered per-ray samples and everything composited from them.
template <typename T>
struct RaySampleSet {
  std::vector<T> t;
  std::vector<T> s;
  std::vector<Vec3<T>> n_sdf;   // raw SDF gradients
  std::vector<Vec3<T>> n_comp;  // rotated raw gradients (same norms)
  std::vector<Vec3<T>> color;
  std::vector<T> fg;  // n * feat_dim geometry features
  std::vector<T> alpha, trans, weight;
  T trans_end = 1;

  int count() const { return int(t.size()); }
};

template <typename T>
struct RenderedPixel {
  Vec3<T> c_hat{0, 0, 0};
  Vec3<T> n_comp{0, 0, 0};  // weight-sum of per-sample unit compensated normals
  Vec3<T> n_sdf{0, 0, 0};   // weight-sum of per-sample unit SDF normals
  T acc_weight = 0;
};

/// Per-ray training record: one tape per sample for each network.
template <typename T>
struct PixelTape {
  std::vector<typename HybridGeometryField<T>::Tape> geom;
  std::vector<typename DirectionalHead<T>::Tape> color;
  std::vector<typename DirectionalHead<T>::Tape> comp;
  std::vector<RotationZYX<T>> rot;
  std::vector<Vec3<T>> angles;
  std::vector<Vec3<T>> n_hat;
  std::vector<T> inv_norm;
  std::vector<T> enc_v;
  std::vector<T> fg_bar;  // scratch, feat_dim

  void ensure(int n_samples, int enc_v_dim, int feat_dim) {
    if (int(geom.size()) < n_samples) {
      geom.resize(n_samples);
      color.resize(n_samples);
      comp.resize(n_samples);
      rot.resize(n_samples);
      angles.resize(n_samples);
      n_hat.resize(n_samples);
      inv_norm.resize(n_samples);
    }
    enc_v.resize(enc_v_dim);
    fg_bar.resize(feat_dim);
  }
};

/// Renders one ray. stage 1 skips the compensation head; tape may be null
/// for inference-only use. Deterministic for a fixed (ray, seed).
template <typename T>
RenderedPixel<T> render_pixel(Model<T>& model, const Ray& ray, int stage,
                              const RenderOptions& opts, uint64_t seed, RaySampleSet<T>& samples,
                              PixelTape<T>* tape = nullptr) {
  const FieldConfig& cfg = model.cfg;
  const int feat = cfg.feat_dim;

  Pcg32 rng(mix64(seed, (uint64_t(uint32_t(ray.view + 1)) << 32) ^
                            (uint64_t(uint32_t(ray.row)) << 16) ^ uint64_t(uint32_t(ray.col))));

  thread_local typename HybridGeometryField<T>::Tape coarse_tape;
  auto sdf_at = [&](T t) -> T {
    Vec3<T> p{T(ray.origin.x + t * ray.dir.x), T(ray.origin.y + t * ray.dir.y),
              T(ray.origin.z + t * ray.dir.z)};
    return model.geometry.eval(p, coarse_tape);
  };
  std::vector<T> ts = sample_points<T>(T(ray.near), T(ray.far), opts.n_uniform, opts.n_importance,
                                       opts.importance_rounds, rng, sdf_at);
  const int n = int(ts.size());

  PixelTape<T> local_tape;
  PixelTape<T>* tp = tape ? tape : &local_tape;
  tp->ensure(n, positional_encoding_size(3, cfg.pe_v_freqs), feat);

  T vdir[3] = {T(ray.dir.x), T(ray.dir.y), T(ray.dir.z)};
  positional_encoding(vdir, 3, cfg.pe_v_freqs, tp->enc_v.data());

  samples.t = ts;
  samples.s.resize(n);
  samples.n_sdf.resize(n);
  samples.n_comp.resize(n);
  samples.color.resize(n);
  samples.fg.resize(size_t(n) * feat);
  samples.alpha.assign(n, T(0));
  samples.trans.resize(n);
  samples.weight.resize(n);

  const bool use_comp = stage >= 2;
  Vec3<T> vdir_v{T(ray.dir.x), T(ray.dir.y), T(ray.dir.z)};

  for (int i = 0; i < n; i++) {
    Vec3<T> x{T(ray.origin.x + ts[i] * ray.dir.x), T(ray.origin.y + ts[i] * ray.dir.y),
              T(ray.origin.z + ts[i] * ray.dir.z)};
    auto& gt = tp->geom[i];
    model.geometry.eval_jet(x, gt);
    samples.s[i] = gt.s;
    samples.n_sdf[i] = gt.n;
    std::copy(gt.fg, gt.fg + feat, samples.fg.begin() + size_t(i) * feat);

    T norm = length(gt.n);
    T inv = T(1) / std::max(norm, T(1e-9));
    tp->inv_norm[i] = inv;
    Vec3<T> n_hat = gt.n * inv;
    tp->n_hat[i] = n_hat;

    const T* c = model.color.head.eval(x, tp->enc_v.data(), n_hat, gt.fg, tp->color[i]);
    samples.color[i] = {c[0], c[1], c[2]};

    if (use_comp) {
      const T* a = model.comp.head.eval(x, tp->enc_v.data(), n_hat, gt.fg, tp->comp[i]);
      tp->angles[i] = {a[0], a[1], a[2]};
      tp->rot[i].set(a[0], a[1], a[2]);
      samples.n_comp[i] = tp->rot[i].apply(gt.n);
    } else {
      tp->angles[i] = {0, 0, 0};
      samples.n_comp[i] = gt.n;
    }
  }

  T tau = model.tau();
  for (int i = 0; i + 1 < n; i++)
    samples.alpha[i] = alpha_from_sdf(samples.s[i], samples.s[i + 1], tau);
  samples.trans_end =
      weights_from_alphas(samples.alpha.data(), n, samples.weight.data(), samples.trans.data());

  RenderedPixel<T> px;
  for (int i = 0; i < n; i++) {
    T w = samples.weight[i];
    px.c_hat += samples.color[i] * w;
    px.n_sdf += tp->n_hat[i] * w;
    px.n_comp += (samples.n_comp[i] * tp->inv_norm[i]) * w;
    px.acc_weight += w;
  }
  px.c_hat += model.background() * samples.trans_end;
  return px;
}

/// Pixel-level adjoints for one rendered ray.
template <typename T>
struct PixelAdjoints {
  Vec3<T> c_hat{0, 0, 0};
  Vec3<T> n_comp{0, 0, 0};
  // per-sample adjoints of the raw SDF gradient (eikonal term), may be empty
  std::vector<Vec3<T>> n_sdf_extra;
};

/// Reverse pass matching render_pixel. Accumulates into grads and writes
/// grid corner contributions for sample i at contribs + i * stride.
template <typename T>
void render_pixel_backward(Model<T>& model, int stage, const RaySampleSet<T>& samples,
                           PixelTape<T>& tape, const PixelAdjoints<T>& adj, ModelGrads<T>& grads,
                           GridContrib<T>* contribs, int contrib_stride) {
  const int n = samples.count();
  const int feat = model.cfg.feat_dim;
  const bool use_comp = stage >= 2;
  const T tau = model.tau();

  // alpha adjoints via the suffix recurrence
  thread_local std::vector<T> a_scalar, alpha_bar;
  a_scalar.resize(n);
  alpha_bar.resize(n);
  Vec3<T> bg = model.background();
  for (int i = 0; i < n; i++) {
    T acc = dot(samples.color[i], adj.c_hat);
    acc += dot(samples.n_comp[i] * tape.inv_norm[i], adj.n_comp);
    a_scalar[i] = acc;
  }
  T a_end = dot(bg, adj.c_hat);
  alpha_backward(samples.alpha.data(), samples.trans.data(), n, a_scalar.data(), a_end,
                 alpha_bar.data());

  // background logits
  Vec3<T> dbg{bg.x * (T(1) - bg.x), bg.y * (T(1) - bg.y), bg.z * (T(1) - bg.z)};
  grads.bg += Vec3<T>{adj.c_hat.x * dbg.x, adj.c_hat.y * dbg.y, adj.c_hat.z * dbg.z} *
              samples.trans_end;

  // s adjoints from the alpha formula (last alpha is a constant pad)
  thread_local std::vector<T> s_bar;
  s_bar.assign(n, T(0));
  for (int i = 0; i + 1 < n; i++) {
    if (alpha_bar[i] == T(0)) continue;
    AlphaGrad<T> g = alpha_from_sdf_grad(samples.s[i], samples.s[i + 1], tau);
    s_bar[i] += alpha_bar[i] * g.d_si;
    s_bar[i + 1] += alpha_bar[i] * g.d_snext;
    grads.tau_rho += alpha_bar[i] * g.d_tau * tau;  // tau = exp(rho)
  }

  for (int i = 0; i < n; i++) {
    T w = samples.weight[i];
    Vec3<T> nhat_bar{0, 0, 0};
    std::fill(tape.fg_bar.begin(), tape.fg_bar.end(), T(0));
    Vec3<T> n_raw_bar = adj.n_sdf_extra.empty() ? Vec3<T>{0, 0, 0} : adj.n_sdf_extra[i];

    // color stream
    T c_bar[3] = {w * adj.c_hat.x, w * adj.c_hat.y, w * adj.c_hat.z};
    model.color.head.backward(tape.color[i], c_bar, grads.color, nhat_bar, tape.fg_bar.data());

    // compensated-normal stream: composited value is rot(n_hat) * w
    Vec3<T> ncomp_hat_bar = adj.n_comp * w;
    if (use_comp) {
      T angle_bar[3] = {0, 0, 0};
      tape.rot[i].backward(tape.n_hat[i], ncomp_hat_bar, nhat_bar, angle_bar);
      model.comp.head.backward(tape.comp[i], angle_bar, grads.comp, nhat_bar, tape.fg_bar.data());
    } else {
      nhat_bar += ncomp_hat_bar;
    }

    // normalize backward: n_hat = n / max(|n|, eps)
    Vec3<T> nh = tape.n_hat[i];
    T inv = tape.inv_norm[i];
    Vec3<T> n_bar = (nhat_bar - nh * dot(nh, nhat_bar)) * inv + n_raw_bar;

    model.geometry.backward_jet(tape.geom[i], s_bar[i], tape.fg_bar.data(), n_bar, grads.geometry,
                                contribs ? contribs + size_t(i) * contrib_stride : nullptr);
  }
}

}  // namespace ncrecon
