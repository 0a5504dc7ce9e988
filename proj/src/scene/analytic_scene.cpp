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

#include "ncrecon/scene/analytic_scene.hpp"

#include <cmath>
#include <limits>
#include <stdexcept>

namespace ncrecon {

namespace {

double box_sdf(Vec3d q, Vec3d he) {
  Vec3d d = vabs(q) - he;
  Vec3d outside = vmax(d, Vec3d{0, 0, 0});
  double inside = std::min(std::max(d.x, std::max(d.y, d.z)), 0.0);
  return length(outside) + inside;
}

}  // namespace

double primitive_sdf(const Primitive& p, Vec3d x) {
  Vec3d q = x - p.center;
  switch (p.kind) {
    case Primitive::Kind::sphere:
      return length(q) - p.half_extents.x;
    case Primitive::Kind::box:
      return box_sdf(q, p.half_extents);
    case Primitive::Kind::room_shell:
      // solid complement of the open box: walls and everything beyond
      return -box_sdf(q, p.half_extents);
  }
  return std::numeric_limits<double>::infinity();
}

double scene_sdf(const AnalyticScene& scene, Vec3d x) {
  double d = std::numeric_limits<double>::infinity();
  for (const auto& p : scene.primitives) d = std::min(d, primitive_sdf(p, x));
  return d;
}

int scene_nearest_primitive(const AnalyticScene& scene, Vec3d x) {
  int best = -1;
  double d = std::numeric_limits<double>::infinity();
  for (size_t i = 0; i < scene.primitives.size(); i++) {
    double di = primitive_sdf(scene.primitives[i], x);
    if (di < d) {
      d = di;
      best = int(i);
    }
  }
  return best;
}

Vec3d scene_sdf_gradient(const AnalyticScene& scene, Vec3d x, double step) {
  Vec3d g;
  for (int i = 0; i < 3; i++) {
    Vec3d hi = x, lo = x;
    hi[i] += step;
    lo[i] -= step;
    g[i] = (scene_sdf(scene, hi) - scene_sdf(scene, lo)) / (2 * step);
  }
  return g;
}

AnalyticScene make_room_scene() {
  AnalyticScene s;
  s.name = "room";
  s.light_dir = normalize(s.light_dir);
  s.bounds = {{-1, -1, -1}, {1, 1, 1}};
  s.primitives.push_back({Primitive::Kind::room_shell, {0, 0, 0}, {1, 1, 1}, {0.82f, 0.80f, 0.76f}});
  s.primitives.push_back({Primitive::Kind::box, {-0.35, -0.65, -0.30}, {0.28, 0.35, 0.22}, {0.25f, 0.45f, 0.80f}});
  s.primitives.push_back({Primitive::Kind::sphere, {0.45, -0.70, 0.35}, {0.30, 0.30, 0.30}, {0.85f, 0.30f, 0.25f}});
  return s;
}

AnalyticScene make_table_scene() {
  AnalyticScene s;
  s.name = "table";
  s.light_dir = normalize(s.light_dir);
  s.bounds = {{-1, -1, -1}, {1, 1, 1}};
  s.primitives.push_back({Primitive::Kind::room_shell, {0, 0, 0}, {1, 1, 1}, {0.82f, 0.80f, 0.76f}});
  // tabletop slab
  s.primitives.push_back({Primitive::Kind::box, {0.0, -0.445, 0.0}, {0.45, 0.035, 0.30}, {0.55f, 0.35f, 0.20f}});
  // four thin legs, floor to slab underside
  const double lx = 0.38, lz = 0.23;
  for (int sx = -1; sx <= 1; sx += 2)
    for (int sz = -1; sz <= 1; sz += 2)
      s.primitives.push_back({Primitive::Kind::box,
                              {sx * lx, -0.74, sz * lz},
                              {0.035, 0.26, 0.035},
                              {0.45f, 0.28f, 0.16f}});
  // a ball resting on the table for color variety
  s.primitives.push_back({Primitive::Kind::sphere, {-0.15, -0.26, 0.05}, {0.15, 0.15, 0.15}, {0.25f, 0.62f, 0.30f}});
  return s;
}

AnalyticScene make_box_scene() {
  AnalyticScene s;
  s.name = "smoke";
  s.light_dir = normalize(s.light_dir);
  s.bounds = {{-1, -1, -1}, {1, 1, 1}};
  s.primitives.push_back({Primitive::Kind::room_shell, {0, 0, 0}, {1, 1, 1}, {0.82f, 0.80f, 0.76f}});
  s.primitives.push_back({Primitive::Kind::box, {0.0, -0.55, 0.0}, {0.35, 0.45, 0.30}, {0.30f, 0.50f, 0.75f}});
  return s;
}

AnalyticScene make_scene_preset(const std::string& name) {
  if (name == "room") return make_room_scene();
  if (name == "table") return make_table_scene();
  if (name == "smoke") return make_box_scene();
  throw std::invalid_argument("unknown scene preset: " + name);
}

}  // namespace ncrecon
