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

#include "ncrecon/scene/sphere_trace.hpp"

#include "ncrecon/core/threading.hpp"

namespace ncrecon {

std::optional<TraceHit> sphere_trace(const AnalyticScene& scene, Vec3d origin, Vec3d dir,
                                     const TraceParams& params) {
  double t = params.t_start;
  for (int step = 0; step < params.max_steps; step++) {
    Vec3d p = origin + dir * t;
    double d = scene_sdf(scene, p);
    if (d < params.converge_eps) {
      TraceHit hit;
      hit.t = t;
      hit.point = p;
      hit.normal = normalize(scene_sdf_gradient(scene, p));
      return hit;
    }
    t += d;
    if (t > params.t_far) return std::nullopt;
  }
  return std::nullopt;
}

GTFrame render_gt_frame(const AnalyticScene& scene, const CameraPose& cam) {
  GTFrame f;
  const int h = cam.height, w = cam.width;
  f.color = ImageF(h, w, 3);
  f.depth = ImageF(h, w, 1);
  f.normal = ImageF(h, w, 3);
  f.valid = MaskImage(h, w, 1);

  TraceParams params;
  params.t_far = length(scene.bounds.extent()) * 2.0;

  parallel_for(int64_t(h) * w, [&](int64_t idx) {
    int row = int(idx / w), col = int(idx % w);
    Vec3d dir = cam.pixel_direction(row, col);
    auto hit = sphere_trace(scene, cam.translation, dir, params);
    if (!hit) return;
    int prim = scene_nearest_primitive(scene, hit->point);
    Vec3f albedo = prim >= 0 ? scene.primitives[prim].albedo : Vec3f{0.5f, 0.5f, 0.5f};
    double ndotl = std::max(0.0, dot(hit->normal, scene.light_dir));
    float shade = scene.ambient + (1.0f - scene.ambient) * float(ndotl);
    f.color.set_rgb(row, col, albedo * shade);
    f.depth.at(row, col, 0) = float(hit->t);
    f.normal.set_rgb(row, col, Vec3f(hit->normal));
    f.valid.at(row, col, 0) = 1;
  });
  return f;
}

}  // namespace ncrecon
