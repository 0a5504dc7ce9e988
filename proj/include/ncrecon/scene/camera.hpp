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

#include "ncrecon/core/vec.hpp"

namespace ncrecon {

/// Pinhole camera. Convention: right-handed, camera looks down -z,
/// +x right, +y up; `rotation` maps camera coordinates to world.
struct CameraPose {
  Mat3d rotation;        // camera-to-world, orthonormal det +1
  Vec3d translation;     // camera center in world space
  double fx = 0, fy = 0; // focal lengths in pixels
  double cx = 0, cy = 0; // principal point in pixels
  int width = 0, height = 0;

  Vec3d forward() const { return -rotation.col(2); }

  /// Unit world-space direction through the center of pixel (row, col).
  Vec3d pixel_direction(double row, double col) const {
    Vec3d d_cam{(col + 0.5 - cx) / fx, -(row + 0.5 - cy) / fy, -1.0};
    return normalize(rotation * d_cam);
  }

  /// Max deviation of R^T R from identity; 0 for an exact rotation.
  double orthonormality_error() const {
    Mat3d rt = rotation.transposed() * rotation;
    double err = 0;
    for (int r = 0; r < 3; r++)
      for (int c = 0; c < 3; c++) err = std::max(err, std::abs(rt(r, c) - (r == c ? 1.0 : 0.0)));
    return err;
  }

  bool valid(double tol = 1e-6) const {
    return width > 0 && height > 0 && fx > 0 && fy > 0 && orthonormality_error() <= tol &&
           std::abs(rotation.det() - 1.0) <= tol;
  }
};

/// Look-at constructor under the declared convention (+y up hint).
CameraPose make_look_at(Vec3d eye, Vec3d target, Vec3d up_hint, double fov_x_rad, int width,
                        int height);

}  // namespace ncrecon
