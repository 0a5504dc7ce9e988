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

#include <array>
#include <cassert>
#include <cstdint>
#include <vector>

#include "ncrecon/fields/field_config.hpp"

namespace ncrecon {

/// One corner-feature gradient produced by grid backward.
template <typename T>
struct GridContrib {
  int32_t level = 0;
  int64_t index = 0;  // flat voxel index (channel 0 offset / channels)
  std::array<T, 4> g{};
};

/// Dense multi-resolution voxel feature grids over [-1,1]^3, trilinear
/// interpolation per level, features concatenated coarse-to-fine.
/// Queries outside the domain are clamped (zero spatial tangent there).
template <typename T>
struct MultiResGrid {
  struct Level {
    int res = 0;
    std::vector<T> data;  // res^3 * channels, idx ((iz*res+iy)*res+ix)*C + c
  };

  GridConfig cfg;
  std::vector<Level> levels;

  struct LevelCell {
    int ix, iy, iz;
    T fx, fy, fz;
    T sx, sy, sz;  // du/dx per axis; 0 where the query clamped
  };
  struct CellCache {
    std::array<LevelCell, 16> cell;
  };

  void init(const GridConfig& c) {
    assert(c.channels >= 1 && c.channels <= 4);
    assert(c.levels >= 1 && c.levels <= 16);
    cfg = c;
    levels.resize(c.levels);
    int prev = 0;
    for (int l = 0; l < c.levels; l++) {
      int res = std::max(2, c.level_resolution(l));
      if (res <= prev) res = prev + 1;  // strictly increasing resolutions
      levels[l].res = res;
      levels[l].data.assign(size_t(res) * res * res * c.channels, T(0));
      prev = res;
    }
  }

  int feature_dim() const { return cfg.levels * cfg.channels; }

  size_t voxel_count() const {
    size_t n = 0;
    for (const auto& l : levels) n += size_t(l.res) * l.res * l.res;
    return n;
  }

  LevelCell locate(const T x[3], int res) const {
    LevelCell c;
    T u[3], s[3];
    for (int k = 0; k < 3; k++) {
      T scale = T(0.5) * (res - 1);
      T uk = (x[k] + T(1)) * scale;
      s[k] = scale;
      if (uk <= T(0)) {
        uk = T(0);
        s[k] = T(0);
      } else if (uk >= T(res - 1)) {
        uk = T(res - 1);
        s[k] = T(0);
      }
      u[k] = uk;
    }
    c.ix = std::min(int(u[0]), res - 2);
    c.iy = std::min(int(u[1]), res - 2);
    c.iz = std::min(int(u[2]), res - 2);
    c.fx = u[0] - c.ix;
    c.fy = u[1] - c.iy;
    c.fz = u[2] - c.iz;
    c.sx = s[0];
    c.sy = s[1];
    c.sz = s[2];
    return c;
  }

  /// Value-only interpolation; out has feature_dim() entries.
  void interp(const T x[3], T* out) const { interp_impl(x, out, nullptr, nullptr); }

  /// Interpolation with spatial tangents (tan_out: 3 rows x feature_dim)
  /// and a cell cache for the later backward.
  void interp_jet(const T x[3], T* out, T* tan_out, CellCache& cache) const {
    interp_impl(x, out, tan_out, &cache);
  }

  /// Corner-feature gradients for one cached query. fbar: dL/dF (feature_dim);
  /// tan_bar: dL/dTangents (3 x feature_dim, may be null). Writes exactly
  /// levels() * 8 contributions.
  void backward(const CellCache& cache, const T* fbar, const T* tan_bar,
                GridContrib<T>* out) const {
    const int C = cfg.channels;
    const int F = feature_dim();
    int w_idx = 0;
    for (int l = 0; l < cfg.levels; l++) {
      const LevelCell& cell = cache.cell[l];
      const int res = levels[l].res;
      for (int corner = 0; corner < 8; corner++) {
        int dx = corner & 1, dy = (corner >> 1) & 1, dz = (corner >> 2) & 1;
        T px = dx ? cell.fx : T(1) - cell.fx;
        T py = dy ? cell.fy : T(1) - cell.fy;
        T pz = dz ? cell.fz : T(1) - cell.fz;
        T w = px * py * pz;
        T dwx = (dx ? T(1) : T(-1)) * py * pz * cell.sx;
        T dwy = (dy ? T(1) : T(-1)) * px * pz * cell.sy;
        T dwz = (dz ? T(1) : T(-1)) * px * py * cell.sz;
        GridContrib<T>& gc = out[w_idx++];
        gc.level = l;
        gc.index = (int64_t(cell.iz + dz) * res + (cell.iy + dy)) * res + (cell.ix + dx);
        for (int c = 0; c < C; c++) {
          T g = w * fbar[l * C + c];
          if (tan_bar) {
            g += dwx * tan_bar[0 * F + l * C + c];
            g += dwy * tan_bar[1 * F + l * C + c];
            g += dwz * tan_bar[2 * F + l * C + c];
          }
          gc.g[c] = g;
        }
      }
    }
  }

  int contrib_count() const { return cfg.levels * 8; }

 private:
  void interp_impl(const T x[3], T* out, T* tan_out, CellCache* cache) const {
    const int C = cfg.channels;
    const int F = feature_dim();
    if (tan_out)
      for (int k = 0; k < 3; k++)
        for (int i = 0; i < F; i++) tan_out[k * F + i] = T(0);

    for (int l = 0; l < cfg.levels; l++) {
      const Level& lev = levels[l];
      LevelCell cell = locate(x, lev.res);
      if (cache) cache->cell[l] = cell;

      for (int c = 0; c < C; c++) out[l * C + c] = T(0);
      for (int corner = 0; corner < 8; corner++) {
        int dx = corner & 1, dy = (corner >> 1) & 1, dz = (corner >> 2) & 1;
        T px = dx ? cell.fx : T(1) - cell.fx;
        T py = dy ? cell.fy : T(1) - cell.fy;
        T pz = dz ? cell.fz : T(1) - cell.fz;
        T w = px * py * pz;
        size_t base =
            (size_t(cell.iz + dz) * lev.res + (cell.iy + dy)) * lev.res + (cell.ix + dx);
        const T* f = lev.data.data() + base * C;
        for (int c = 0; c < C; c++) out[l * C + c] += w * f[c];
        if (tan_out) {
          T dwx = (dx ? T(1) : T(-1)) * py * pz * cell.sx;
          T dwy = (dy ? T(1) : T(-1)) * px * pz * cell.sy;
          T dwz = (dz ? T(1) : T(-1)) * px * py * cell.sz;
          for (int c = 0; c < C; c++) {
            tan_out[0 * F + l * C + c] += dwx * f[c];
            tan_out[1 * F + l * C + c] += dwy * f[c];
            tan_out[2 * F + l * C + c] += dwz * f[c];
          }
        }
      }
    }
  }
};

}  // namespace ncrecon
