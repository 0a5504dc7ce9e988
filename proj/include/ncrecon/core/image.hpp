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

#include <cassert>
#include <cstdint>
#include <vector>

#include "ncrecon/core/vec.hpp"

namespace ncrecon {

/// Dense H x W x C raster, row-major, channel-interleaved.
template <typename T>
struct Image {
  int height = 0, width = 0, channels = 0;
  std::vector<T> data;

  Image() = default;
  Image(int h, int w, int c, T fill = T(0)) : height(h), width(w), channels(c), data(size_t(h) * w * c, fill) {}

  bool empty() const { return data.empty(); }
  size_t pixel_count() const { return size_t(height) * width; }

  T* at(int row, int col) { return data.data() + (size_t(row) * width + col) * channels; }
  const T* at(int row, int col) const { return data.data() + (size_t(row) * width + col) * channels; }

  T& at(int row, int col, int ch) { return data[(size_t(row) * width + col) * channels + ch]; }
  T at(int row, int col, int ch) const { return data[(size_t(row) * width + col) * channels + ch]; }

  Vec3<T> rgb(int row, int col) const {
    const T* p = at(row, col);
    return {p[0], p[1], p[2]};
  }
  void set_rgb(int row, int col, Vec3<T> v) {
    T* p = at(row, col);
    p[0] = v.x;
    p[1] = v.y;
    p[2] = v.z;
  }
};

using ImageF = Image<float>;
using ImageU8 = Image<uint8_t>;
using MaskImage = Image<uint8_t>;

/// Bilinear resize; channels preserved, edge-clamped sampling.
template <typename T>
Image<T> resize_bilinear(const Image<T>& src, int out_h, int out_w) {
  Image<T> dst(out_h, out_w, src.channels);
  if (src.empty() || out_h <= 0 || out_w <= 0) return dst;
  const double sy = double(src.height) / out_h;
  const double sx = double(src.width) / out_w;
  for (int r = 0; r < out_h; r++) {
    double fy = (r + 0.5) * sy - 0.5;
    int y0 = (int)std::floor(fy);
    double wy = fy - y0;
    int y1 = std::clamp(y0 + 1, 0, src.height - 1);
    y0 = std::clamp(y0, 0, src.height - 1);
    for (int c = 0; c < out_w; c++) {
      double fx = (c + 0.5) * sx - 0.5;
      int x0 = (int)std::floor(fx);
      double wx = fx - x0;
      int x1 = std::clamp(x0 + 1, 0, src.width - 1);
      x0 = std::clamp(x0, 0, src.width - 1);
      for (int ch = 0; ch < src.channels; ch++) {
        double v = (1 - wy) * ((1 - wx) * src.at(y0, x0, ch) + wx * src.at(y0, x1, ch)) +
                   wy * ((1 - wx) * src.at(y1, x0, ch) + wx * src.at(y1, x1, ch));
        dst.at(r, c, ch) = T(v);
      }
    }
  }
  return dst;
}

inline ImageU8 to_u8(const ImageF& img) {
  ImageU8 out(img.height, img.width, img.channels);
  for (size_t i = 0; i < img.data.size(); i++) {
    float v = std::clamp(img.data[i], 0.0f, 1.0f);
    out.data[i] = uint8_t(std::lround(v * 255.0f));
  }
  return out;
}

inline ImageF to_float(const ImageU8& img) {
  ImageF out(img.height, img.width, img.channels);
  for (size_t i = 0; i < img.data.size(); i++) out.data[i] = float(img.data[i]) / 255.0f;
  return out;
}

}  // namespace ncrecon
