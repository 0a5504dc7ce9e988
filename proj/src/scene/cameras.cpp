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

#include "ncrecon/scene/cameras.hpp"

#include <cmath>
#include <stdexcept>

#include "ncrecon/core/rng.hpp"

namespace ncrecon {

CameraPose make_look_at(Vec3d eye, Vec3d target, Vec3d up_hint, double fov_x_rad, int width,
                        int height) {
  Vec3d backward = normalize(eye - target);  // camera +z
  Vec3d right = cross(up_hint, backward);
  if (length(right) < 1e-9) right = cross(Vec3d{1, 0, 0}, backward);
  right = normalize(right);
  Vec3d up = cross(backward, right);

  CameraPose cam;
  for (int r = 0; r < 3; r++) {
    cam.rotation(r, 0) = right[r];
    cam.rotation(r, 1) = up[r];
    cam.rotation(r, 2) = backward[r];
  }
  cam.translation = eye;
  cam.width = width;
  cam.height = height;
  cam.fx = 0.5 * width / std::tan(0.5 * fov_x_rad);
  cam.fy = cam.fx;
  cam.cx = 0.5 * width;
  cam.cy = 0.5 * height;
  return cam;
}

std::vector<CameraPose> generate_cameras(const AnalyticScene& scene, int n_views, uint64_t seed,
                                         int width, int height, double fov_x_rad) {
  if (n_views < 2) throw std::invalid_argument("generate_cameras: n_views must be >= 2");
  if (scene.bounds.degenerate()) throw std::invalid_argument("generate_cameras: degenerate scene bounds");

  Pcg32 rng(mix64(seed, 0x6361'6d65'7261ull));
  Vec3d c = scene.bounds.center();
  Vec3d half = scene.bounds.extent() * 0.5;
  double r_orbit = 0.62 * std::min(half.x, std::min(half.y, half.z));

  std::vector<CameraPose> cams;
  cams.reserve(n_views);
  for (int i = 0; i < n_views; i++) {
    double az = 2.0 * M_PI * (i + rng.uniform(-0.25, 0.25)) / n_views;
    double el = rng.uniform(-0.30, 0.35);
    double r = r_orbit * (1.0 + rng.uniform(-0.12, 0.12));
    Vec3d eye = c + Vec3d{r * std::cos(el) * std::cos(az), r * std::sin(el),
                          r * std::cos(el) * std::sin(az)};
    // aim near the scene center with a small jitter so optical axes differ
    Vec3d target = c + Vec3d{rng.uniform(-0.15, 0.15), rng.uniform(-0.25, 0.05),
                             rng.uniform(-0.15, 0.15)};
    cams.push_back(make_look_at(eye, target, {0, 1, 0}, fov_x_rad, width, height));
  }
  return cams;
}

}  // namespace ncrecon
