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

#include <cstdint>
#include <string>
#include <vector>

#include "ncrecon/scene/sphere_trace.hpp"

namespace ncrecon {

/// Synthetic view-dependent rotation bias applied to oracle normals to
/// emulate the systematic errors of single-view normal estimators.
struct BiasSpec {
  enum class Mode { none, constant_per_view, direction_dependent };
  enum class AxisRule { fixed, view };  // fixed world axis, or derived from the viewing direction

  Mode mode = Mode::none;
  AxisRule axis_rule = AxisRule::view;
  Vec3d fixed_axis{0, 0, 1};
  double amplitude = 0;   // max rotation angle, radians, in [0, pi/4]
  double noise_std = 0;   // optional per-pixel rotation noise, radians

  static Mode mode_from_string(const std::string& s);
  static std::string mode_to_string(Mode m);
};

struct BiasedNormals {
  ImageF normals;                // H x W x 3, unit length where valid
  std::vector<Vec3d> rotations;  // axis-angle per pixel (row-major), exact applied rotation
};

/// Rotates every valid normal by the spec-determined rotation and records the
/// exact rotation per pixel so learned compensation can be audited later.
/// constant_per_view + view rule rotates about the camera optical axis;
/// direction_dependent uses the per-pixel viewing direction as the axis.
/// Throws on amplitude outside [0, pi/4].
BiasedNormals inject_view_bias(const GTFrame& frame, const CameraPose& cam, const BiasSpec& spec,
                               uint64_t seed);

}  // namespace ncrecon
