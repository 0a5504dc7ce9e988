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

#include <string>

#include "ncrecon/fields/geometry_field.hpp"
#include "ncrecon/fields/sample_fields.hpp"

namespace ncrecon {

/// Everything learnable: the three fields plus the logistic sharpness
/// (tau = exp(rho), kept positive by construction) and a constant
/// background color absorbing the weight that escapes the scene.
template <typename T>
struct Model {
  FieldConfig cfg;
  HybridGeometryField<T> geometry;
  ColorField<T> color;
  CompensationField<T> comp;
  T tau_rho = 0;
  Vec3<T> bg_logit{0, 0, 0};

  void init(const FieldConfig& config, uint64_t seed) {
    cfg = config;
    geometry.init(config, mix64(seed, 1));
    color.init(config, mix64(seed, 2));
    comp.init(config, mix64(seed, 3));
    tau_rho = std::log(T(config.tau_init));
    bg_logit = {0, 0, 0};
  }

  T tau() const { return std::exp(tau_rho); }

  Vec3<T> background() const {
    return {T(1) / (T(1) + std::exp(-bg_logit.x)), T(1) / (T(1) + std::exp(-bg_logit.y)),
            T(1) / (T(1) + std::exp(-bg_logit.z))};
  }
};

template <typename T>
struct ModelGrads {
  typename HybridGeometryField<T>::Grads geometry;
  MlpGrads<T> color, comp;
  T tau_rho = 0;
  Vec3<T> bg{0, 0, 0};

  void init(const Model<T>& m) {
    geometry.init(m.geometry);
    color.init(m.color.head.net.layers);
    comp.init(m.comp.head.net.layers);
    tau_rho = 0;
    bg = {0, 0, 0};
  }
  void zero() {
    geometry.zero();
    color.zero();
    comp.zero();
    tau_rho = 0;
    bg = {0, 0, 0};
  }
  void add(const ModelGrads& o) {
    geometry.add(o.geometry);
    color.add(o.color);
    comp.add(o.comp);
    tau_rho += o.tau_rho;
    bg += o.bg;
  }
};

/// Named view over a parameter (or gradient) array. `lazy` marks grid
/// levels, which the optimizer updates sparsely.
template <typename T>
struct ParamRef {
  std::string name;
  T* data = nullptr;
  size_t n = 0;
  bool lazy = false;
};

template <typename T>
void collect_mlp_params(Mlp<T>& mlp, const std::string& prefix, std::vector<ParamRef<T>>& out) {
  for (size_t l = 0; l < mlp.layers.size(); l++) {
    out.push_back({prefix + "." + std::to_string(l) + ".w", mlp.layers[l].w.data(),
                   mlp.layers[l].w.size(), false});
    out.push_back({prefix + "." + std::to_string(l) + ".b", mlp.layers[l].b.data(),
                   mlp.layers[l].b.size(), false});
  }
}

template <typename T>
void collect_mlp_grads(MlpGrads<T>& g, std::vector<ParamRef<T>>& out) {
  for (size_t l = 0; l < g.gw.size(); l++) {
    out.push_back({"", g.gw[l].data(), g.gw[l].size(), false});
    out.push_back({"", g.gb[l].data(), g.gb[l].size(), false});
  }
}

/// Parameter registry in a fixed order (checkpoint and optimizer layout).
template <typename T>
std::vector<ParamRef<T>> collect_params(Model<T>& m) {
  std::vector<ParamRef<T>> out;
  collect_mlp_params(m.geometry.smooth, "geometry.smooth", out);
  collect_mlp_params(m.geometry.decoder, "geometry.decoder", out);
  for (size_t l = 0; l < m.geometry.grid.levels.size(); l++)
    out.push_back({"geometry.grid." + std::to_string(l), m.geometry.grid.levels[l].data.data(),
                   m.geometry.grid.levels[l].data.size(), true});
  collect_mlp_params(m.color.head.net, "color", out);
  collect_mlp_params(m.comp.head.net, "comp", out);
  out.push_back({"tau.rho", &m.tau_rho, 1, false});
  out.push_back({"background.logit", &m.bg_logit.x, 3, false});
  return out;
}

/// Gradient registry aligned index-for-index with collect_params, except
/// grid levels (handled sparsely outside metric arrays).
template <typename T>
std::vector<ParamRef<T>> collect_grads(Model<T>& m, ModelGrads<T>& g,
                                       std::vector<std::vector<T>>& grid_grads) {
  std::vector<ParamRef<T>> out;
  collect_mlp_grads(g.geometry.smooth, out);
  collect_mlp_grads(g.geometry.decoder, out);
  for (size_t l = 0; l < m.geometry.grid.levels.size(); l++)
    out.push_back({"", grid_grads[l].data(), grid_grads[l].size(), true});
  collect_mlp_grads(g.color, out);
  collect_mlp_grads(g.comp, out);
  out.push_back({"", &g.tau_rho, 1, false});
  out.push_back({"", &g.bg.x, 3, false});
  return out;
}

}  // namespace ncrecon
