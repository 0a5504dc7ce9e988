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

namespace ncrecon {

/// Multi-resolution dense feature grids; resolutions follow a geometric
/// progression from base_res to finest_res.
struct GridConfig {
  int levels = 8;
  int channels = 4;
  int base_res = 16;
  int finest_res = 512;  // tune down for desk-scale runs

  int level_resolution(int level) const {
    if (levels <= 1) return finest_res;
    double t = double(level) / double(levels - 1);
    return int(std::lround(base_res * std::pow(double(finest_res) / base_res, t)));
  }
};

struct FieldConfig {
  // widths; every net has 4 hidden layers
  int smooth_width = 256;
  int decoder_width = 256;
  int color_width = 256;
  int comp_width = 128;
  int feat_dim = 256;  // geometry feature F_g
  int n_hidden = 4;

  int pe_x_freqs = 6;  // positional encoding octaves for x
  int pe_v_freqs = 4;  // and for the view direction

  double softplus_beta = 100.0;
  double angle_cap = M_PI / 4;        // compensation angles live in [-cap, cap]
  double sphere_init_radius = 0.6;    // geometric initialization target
  double tau_init = 10.0;             // logistic sharpness at start (band ~0.1 units)

  bool use_grid = true;  // false = MLP-only geometry (ablation)
  GridConfig grid;
};

}  // namespace ncrecon
