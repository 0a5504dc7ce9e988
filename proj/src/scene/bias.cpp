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

#include "ncrecon/scene/bias.hpp"

#include <cmath>
#include <stdexcept>

#include "ncrecon/core/rng.hpp"

namespace ncrecon {

BiasSpec::Mode BiasSpec::mode_from_string(const std::string& s) {
  if (s == "none") return Mode::none;
  if (s == "constant_per_view") return Mode::constant_per_view;
  if (s == "direction_dependent") return Mode::direction_dependent;
  throw std::invalid_argument("unknown bias mode: " + s);
}

std::string BiasSpec::mode_to_string(Mode m) {
  switch (m) {
    case Mode::none: return "none";
    case Mode::constant_per_view: return "constant_per_view";
    case Mode::direction_dependent: return "direction_dependent";
  }
  return "none";
}

BiasedNormals inject_view_bias(const GTFrame& frame, const CameraPose& cam, const BiasSpec& spec,
                               uint64_t seed) {
  if (spec.amplitude < 0 || spec.amplitude > M_PI / 4 + 1e-12)
    throw std::invalid_argument("inject_view_bias: amplitude must lie in [0, pi/4]");
  if (spec.noise_std < 0) throw std::invalid_argument("inject_view_bias: noise std must be >= 0");

  const int h = frame.normal.height, w = frame.normal.width;
  BiasedNormals out;
  out.normals = frame.normal;
  out.rotations.assign(size_t(h) * w, Vec3d{0, 0, 0});

  const bool has_noise = spec.noise_std > 0;
  if (spec.mode == BiasSpec::Mode::none && !has_noise) return out;

  // per-view rotation for the constant mode
  Mat3d view_rot = Mat3d::identity();
  if (spec.mode == BiasSpec::Mode::constant_per_view) {
    Vec3d axis = spec.axis_rule == BiasSpec::AxisRule::fixed ? normalize(spec.fixed_axis)
                                                             : normalize(cam.forward());
    view_rot = rotation_axis_angle(axis, spec.amplitude);
  }

  Pcg32 rng(mix64(seed, 0x6269'6173ull));
  for (int row = 0; row < h; row++) {
    for (int col = 0; col < w; col++) {
      size_t idx = size_t(row) * w + col;
      // draw noise unconditionally so pixel streams stay aligned across specs
      Vec3d noise_axis{0, 0, 1};
      double noise_angle = 0;
      if (has_noise) {
        noise_axis = normalize(Vec3d{rng.normal(), rng.normal(), rng.normal()});
        if (length(noise_axis) < 0.5) noise_axis = {0, 0, 1};
        noise_angle = rng.normal() * spec.noise_std;
      }
      if (!frame.valid.at(row, col, 0)) continue;

      Mat3d r = view_rot;
      if (spec.mode == BiasSpec::Mode::direction_dependent) {
        Vec3d axis = spec.axis_rule == BiasSpec::AxisRule::fixed
                         ? normalize(spec.fixed_axis)
                         : cam.pixel_direction(row, col);
        r = rotation_axis_angle(axis, spec.amplitude);
      }
      if (has_noise) r = rotation_axis_angle(noise_axis, noise_angle) * r;

      Vec3d n{frame.normal.at(row, col, 0), frame.normal.at(row, col, 1),
              frame.normal.at(row, col, 2)};
      Vec3d biased = r * n;
      out.normals.at(row, col, 0) = float(biased.x);
      out.normals.at(row, col, 1) = float(biased.y);
      out.normals.at(row, col, 2) = float(biased.z);
      out.rotations[idx] = rotation_to_axis_angle(r);
    }
  }
  return out;
}

}  // namespace ncrecon
