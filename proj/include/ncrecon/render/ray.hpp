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

#include <stdexcept>

#include "ncrecon/core/vec.hpp"
#include "ncrecon/scene/camera.hpp"

namespace ncrecon {

struct Ray {
  Vec3d origin;
  Vec3d dir;  // unit
  double near = 0.05, far = 6.0;
  int view = -1, row = 0, col = 0;
};

constexpr double kRayNearDefault = 0.05;
constexpr double kRayFarDefault = 6.0;

/// Ray through the pixel center, near/far from the (slightly expanded)
/// scene bounds intersection clamped to [0.05, 6.0]. Rejects pixels
/// outside the image.
inline Ray pixel_to_ray(const CameraPose& cam, int row, int col, const Aabb3d& bounds) {
  if (row < 0 || col < 0 || row >= cam.height || col >= cam.width)
    throw std::out_of_range("pixel_to_ray: pixel outside image bounds");
  Ray ray;
  ray.origin = cam.translation;
  ray.dir = cam.pixel_direction(row, col);
  ray.row = row;
  ray.col = col;
  // expand so surfaces sitting exactly on the bounds get straddled samples
  Aabb3d expanded{bounds.lo - Vec3d{0.1, 0.1, 0.1}, bounds.hi + Vec3d{0.1, 0.1, 0.1}};
  double t0, t1;
  if (expanded.intersect(ray.origin, ray.dir, t0, t1)) {
    ray.near = std::max(t0, kRayNearDefault);
    ray.far = std::min(t1, kRayFarDefault);
    if (ray.far <= ray.near) {
      ray.near = kRayNearDefault;
      ray.far = kRayFarDefault;
    }
  }
  return ray;
}

}  // namespace ncrecon
