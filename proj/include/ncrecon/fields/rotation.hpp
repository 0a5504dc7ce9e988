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

/// Fixed-order Euler compensation: rotate about x by gamma, then y by
/// beta, then z by theta. Norm-preserving and differentiable in both the
/// angles and the input vector.
template <typename T>
struct RotationZYX {
  Mat3<T> rx, ry, rz, r;  // r = rz * ry * rx

  void set(T gamma, T beta, T theta) {
    rx = rotation_x(gamma);
    ry = rotation_y(beta);
    rz = rotation_z(theta);
    r = rz * (ry * rx);
  }

  Vec3<T> apply(Vec3<T> n) const { return r * n; }

  /// Adjoints: given out_bar = dL/d(R n), accumulates dL/dn and dL/dangles.
  void backward(Vec3<T> n, Vec3<T> out_bar, Vec3<T>& n_bar, T angle_bar[3]) const {
    n_bar += r.transposed() * out_bar;

    // derivative matrices of the elementary rotations
    T cg = rx(1, 1), sg = rx(2, 1);
    T cb = ry(0, 0), sb = ry(0, 2);
    T ct = rz(0, 0), st = rz(1, 0);

    Mat3<T> drx;
    drx.m = {0, 0, 0, 0, -sg, -cg, 0, cg, -sg};
    Mat3<T> dry;
    dry.m = {-sb, 0, cb, 0, 0, 0, -cb, 0, -sb};
    Mat3<T> drz;
    drz.m = {-st, -ct, 0, ct, -st, 0, 0, 0, 0};

    angle_bar[0] += dot(out_bar, rz * (ry * (drx * n)));
    angle_bar[1] += dot(out_bar, rz * (dry * (rx * n)));
    angle_bar[2] += dot(out_bar, drz * (ry * (rx * n)));
  }
};

/// Convenience value-only form of the compensation.
template <typename T>
Vec3<T> compensate_normal(Vec3<T> n_sdf, T gamma, T beta, T theta) {
  RotationZYX<T> rot;
  rot.set(gamma, beta, theta);
  return rot.apply(n_sdf);
}

}  // namespace ncrecon
