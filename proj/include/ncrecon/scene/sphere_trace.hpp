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

#include <optional>

#include "ncrecon/core/image.hpp"
#include "ncrecon/scene/analytic_scene.hpp"
#include "ncrecon/scene/camera.hpp"

namespace ncrecon {

struct TraceHit {
  double t = 0;
  Vec3d point;
  Vec3d normal;  // unit, from finite-difference SDF gradient
};

struct TraceParams {
  int max_steps = 256;
  double converge_eps = 1e-4;
  double t_start = 0.0;
  double t_far = 8.0;
};

/// Root-finding ray march stepping by the SDF value. Returns miss when the
/// far bound or the step budget is exhausted.
std::optional<TraceHit> sphere_trace(const AnalyticScene& scene, Vec3d origin, Vec3d dir,
                                     const TraceParams& params = {});

/// One rendered oracle view: Lambertian color, ray-distance depth,
/// world-frame unit normals, and a hit mask.
struct GTFrame {
  ImageF color;    // H x W x 3 in [0,1]
  ImageF depth;    // H x W x 1, 0 on miss
  ImageF normal;   // H x W x 3 unit vectors, world frame
  MaskImage valid; // H x W x 1, 1 on hit
};

/// Per-pixel sphere trace with fixed-light Lambertian shading plus ambient.
GTFrame render_gt_frame(const AnalyticScene& scene, const CameraPose& cam);

}  // namespace ncrecon
