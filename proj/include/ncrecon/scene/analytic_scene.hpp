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
#include <vector>

#include "ncrecon/core/vec.hpp"

namespace ncrecon {

/// Analytic primitives composed by CSG union (min of member SDFs).
struct Primitive {
  enum class Kind { sphere, box, room_shell };

  Kind kind = Kind::sphere;
  Vec3d center{0, 0, 0};
  Vec3d half_extents{1, 1, 1};  // sphere uses half_extents.x as radius
  Vec3f albedo{0.8f, 0.8f, 0.8f};
};

/// Ground-truth oracle scene: exact SDFs plus Lambertian shading data.
struct AnalyticScene {
  std::string name = "scene";
  std::vector<Primitive> primitives;
  Aabb3d bounds{{-1, -1, -1}, {1, 1, 1}};
  Vec3d light_dir{0.32, 0.45, 0.83};  // normalized at construction
  float ambient = 0.2f;
};

/// Exact signed distance of one primitive.
double primitive_sdf(const Primitive& p, Vec3d x);

/// CSG union: min over primitive SDFs. Exact outside overlaps,
/// a valid lower bound near seams. Total over finite inputs.
double scene_sdf(const AnalyticScene& scene, Vec3d x);

/// Index of the primitive realizing the min at x (for albedo lookup).
int scene_nearest_primitive(const AnalyticScene& scene, Vec3d x);

/// Central finite-difference gradient of the scene SDF, step 1e-4.
Vec3d scene_sdf_gradient(const AnalyticScene& scene, Vec3d x, double step = 1e-4);

// Presets used by the synthetic experiments.
AnalyticScene make_room_scene();   // 2x2x2 shell + box + sphere
AnalyticScene make_table_scene();  // shell + thin-legged table + sphere
AnalyticScene make_box_scene();    // shell + single box (smoke runs)
AnalyticScene make_scene_preset(const std::string& name);

}  // namespace ncrecon
