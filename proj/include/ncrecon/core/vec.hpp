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

#include <cmath>
#include <algorithm>
#include <array>
#include <limits>

namespace ncrecon {

template <typename T>
struct Vec3 {
  T x = 0, y = 0, z = 0;

  constexpr Vec3() = default;
  constexpr Vec3(T x_, T y_, T z_) : x(x_), y(y_), z(z_) {}
  template <typename U>
  constexpr explicit Vec3(const Vec3<U>& v) : x(T(v.x)), y(T(v.y)), z(T(v.z)) {}

  constexpr T operator[](int i) const { return i == 0 ? x : (i == 1 ? y : z); }
  T& operator[](int i) { return i == 0 ? x : (i == 1 ? y : z); }
};

using Vec3f = Vec3<float>;
using Vec3d = Vec3<double>;

template <typename T> constexpr Vec3<T> operator+(Vec3<T> a, Vec3<T> b) { return {a.x + b.x, a.y + b.y, a.z + b.z}; }
template <typename T> constexpr Vec3<T> operator-(Vec3<T> a, Vec3<T> b) { return {a.x - b.x, a.y - b.y, a.z - b.z}; }
template <typename T> constexpr Vec3<T> operator-(Vec3<T> a) { return {-a.x, -a.y, -a.z}; }
template <typename T> constexpr Vec3<T> operator*(Vec3<T> a, T s) { return {a.x * s, a.y * s, a.z * s}; }
template <typename T> constexpr Vec3<T> operator*(T s, Vec3<T> a) { return a * s; }
template <typename T> constexpr Vec3<T> operator*(Vec3<T> a, Vec3<T> b) { return {a.x * b.x, a.y * b.y, a.z * b.z}; }
template <typename T> constexpr Vec3<T> operator/(Vec3<T> a, T s) { return {a.x / s, a.y / s, a.z / s}; }
template <typename T> Vec3<T>& operator+=(Vec3<T>& a, Vec3<T> b) { a.x += b.x; a.y += b.y; a.z += b.z; return a; }
template <typename T> Vec3<T>& operator-=(Vec3<T>& a, Vec3<T> b) { a.x -= b.x; a.y -= b.y; a.z -= b.z; return a; }
template <typename T> Vec3<T>& operator*=(Vec3<T>& a, T s) { a.x *= s; a.y *= s; a.z *= s; return a; }

template <typename T> constexpr T dot(Vec3<T> a, Vec3<T> b) { return a.x * b.x + a.y * b.y + a.z * b.z; }
template <typename T> constexpr Vec3<T> cross(Vec3<T> a, Vec3<T> b) {
  return {a.y * b.z - a.z * b.y, a.z * b.x - a.x * b.z, a.x * b.y - a.y * b.x};
}
template <typename T> T length(Vec3<T> a) { return std::sqrt(dot(a, a)); }
template <typename T> constexpr T length_sq(Vec3<T> a) { return dot(a, a); }
template <typename T> Vec3<T> normalize(Vec3<T> a) {
  T l = length(a);
  return l > T(0) ? a / l : Vec3<T>{0, 0, 0};
}
template <typename T> constexpr Vec3<T> vmin(Vec3<T> a, Vec3<T> b) {
  return {std::min(a.x, b.x), std::min(a.y, b.y), std::min(a.z, b.z)};
}
template <typename T> constexpr Vec3<T> vmax(Vec3<T> a, Vec3<T> b) {
  return {std::max(a.x, b.x), std::max(a.y, b.y), std::max(a.z, b.z)};
}
template <typename T> constexpr Vec3<T> vabs(Vec3<T> a) { return {std::abs(a.x), std::abs(a.y), std::abs(a.z)}; }
template <typename T> constexpr Vec3<T> clamp(Vec3<T> a, T lo, T hi) {
  return {std::clamp(a.x, lo, hi), std::clamp(a.y, lo, hi), std::clamp(a.z, lo, hi)};
}

/// Angle between two vectors in radians, robust near 0 and pi.
template <typename T>
T angle_between(Vec3<T> a, Vec3<T> b) {
  T la = length(a), lb = length(b);
  if (la <= T(0) || lb <= T(0)) return T(0);
  return T(2) * std::atan2(length(a * lb - b * la), length(a * lb + b * la));
}

/// 3x3 matrix, row-major.
template <typename T>
struct Mat3 {
  std::array<T, 9> m = {1, 0, 0, 0, 1, 0, 0, 0, 1};

  static constexpr Mat3 identity() { return {}; }
  constexpr T operator()(int r, int c) const { return m[3 * r + c]; }
  T& operator()(int r, int c) { return m[3 * r + c]; }

  constexpr Vec3<T> row(int r) const { return {m[3 * r], m[3 * r + 1], m[3 * r + 2]}; }
  constexpr Vec3<T> col(int c) const { return {m[c], m[3 + c], m[6 + c]}; }

  Mat3 transposed() const {
    Mat3 t;
    for (int r = 0; r < 3; r++)
      for (int c = 0; c < 3; c++) t(r, c) = (*this)(c, r);
    return t;
  }

  T det() const {
    return m[0] * (m[4] * m[8] - m[5] * m[7]) - m[1] * (m[3] * m[8] - m[5] * m[6]) +
           m[2] * (m[3] * m[7] - m[4] * m[6]);
  }
};

using Mat3f = Mat3<float>;
using Mat3d = Mat3<double>;

template <typename T>
Vec3<T> operator*(const Mat3<T>& a, Vec3<T> v) {
  return {dot(a.row(0), v), dot(a.row(1), v), dot(a.row(2), v)};
}

template <typename T>
Mat3<T> operator*(const Mat3<T>& a, const Mat3<T>& b) {
  Mat3<T> r;
  for (int i = 0; i < 3; i++)
    for (int j = 0; j < 3; j++) r(i, j) = dot(a.row(i), b.col(j));
  return r;
}

template <typename T>
Mat3<T> rotation_x(T a) {
  T c = std::cos(a), s = std::sin(a);
  Mat3<T> r;
  r.m = {1, 0, 0, 0, c, -s, 0, s, c};
  return r;
}
template <typename T>
Mat3<T> rotation_y(T a) {
  T c = std::cos(a), s = std::sin(a);
  Mat3<T> r;
  r.m = {c, 0, s, 0, 1, 0, -s, 0, c};
  return r;
}
template <typename T>
Mat3<T> rotation_z(T a) {
  T c = std::cos(a), s = std::sin(a);
  Mat3<T> r;
  r.m = {c, -s, 0, s, c, 0, 0, 0, 1};
  return r;
}

/// Rodrigues rotation about a unit axis.
template <typename T>
Mat3<T> rotation_axis_angle(Vec3<T> axis, T angle) {
  T c = std::cos(angle), s = std::sin(angle), t = T(1) - c;
  Vec3<T> u = axis;
  Mat3<T> r;
  r.m = {c + u.x * u.x * t,       u.x * u.y * t - u.z * s, u.x * u.z * t + u.y * s,
         u.y * u.x * t + u.z * s, c + u.y * u.y * t,       u.y * u.z * t - u.x * s,
         u.z * u.x * t - u.y * s, u.z * u.y * t + u.x * s, c + u.z * u.z * t};
  return r;
}

/// Log map: rotation matrix -> axis-angle vector (axis scaled by angle).
template <typename T>
Vec3<T> rotation_to_axis_angle(const Mat3<T>& r) {
  T tr = r(0, 0) + r(1, 1) + r(2, 2);
  T cos_a = std::clamp((tr - T(1)) / T(2), T(-1), T(1));
  T angle = std::acos(cos_a);
  if (angle < T(1e-10)) return {0, 0, 0};
  Vec3<T> w{r(2, 1) - r(1, 2), r(0, 2) - r(2, 0), r(1, 0) - r(0, 1)};
  T s = std::sin(angle);
  if (std::abs(s) > T(1e-6)) return w * (angle / (T(2) * s));
  // angle near pi: recover axis from the symmetric part
  Vec3<T> axis{std::sqrt(std::max(T(0), (r(0, 0) + T(1)) / T(2))),
               std::sqrt(std::max(T(0), (r(1, 1) + T(1)) / T(2))),
               std::sqrt(std::max(T(0), (r(2, 2) + T(1)) / T(2)))};
  if (w.x < 0) axis.x = -axis.x;
  if (w.y < 0) axis.y = -axis.y;
  if (w.z < 0) axis.z = -axis.z;
  return normalize(axis) * angle;
}

template <typename T>
Mat3<T> axis_angle_to_rotation(Vec3<T> aa) {
  T angle = length(aa);
  if (angle < T(1e-12)) return Mat3<T>::identity();
  return rotation_axis_angle(aa / angle, angle);
}

/// Axis-aligned bounding box.
template <typename T>
struct Aabb3 {
  Vec3<T> lo{0, 0, 0}, hi{0, 0, 0};

  constexpr Vec3<T> center() const { return (lo + hi) * T(0.5); }
  constexpr Vec3<T> extent() const { return hi - lo; }
  constexpr bool contains(Vec3<T> p) const {
    return p.x >= lo.x && p.x <= hi.x && p.y >= lo.y && p.y <= hi.y && p.z >= lo.z && p.z <= hi.z;
  }
  constexpr bool degenerate() const { return hi.x <= lo.x || hi.y <= lo.y || hi.z <= lo.z; }

  /// Ray/box slab intersection; returns false when the ray misses.
  bool intersect(Vec3<T> o, Vec3<T> d, T& t0, T& t1) const {
    t0 = -std::numeric_limits<T>::infinity();
    t1 = std::numeric_limits<T>::infinity();
    for (int i = 0; i < 3; i++) {
      if (std::abs(d[i]) < T(1e-12)) {
        if (o[i] < lo[i] || o[i] > hi[i]) return false;
        continue;
      }
      T inv = T(1) / d[i];
      T a = (lo[i] - o[i]) * inv, b = (hi[i] - o[i]) * inv;
      if (a > b) std::swap(a, b);
      t0 = std::max(t0, a);
      t1 = std::min(t1, b);
    }
    return t1 >= t0 && t1 >= T(0);
  }
};

using Aabb3f = Aabb3<float>;
using Aabb3d = Aabb3<double>;

}  // namespace ncrecon
