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

#include <cstdint>
#include <string>

#include "ncrecon/scene/bias.hpp"
#include "ncrecon/scene/cameras.hpp"

namespace ncrecon {

// Dataset directory layout (the canonical format the loader reads back):
//   images/NNN.png      8-bit RGB renders
//   normals/NNN.nmb     HxWx3 float32 biased normal priors, world frame
//   normals_gt/NNN.nmb  HxWx3 float32 oracle normals, world frame
//   depth/NNN.nmb       HxWx1 float32 ray-distance depth, 0 = miss
//   bias/NNN.nmb        HxWx3 float32 applied rotations as axis-angle
//   poses.txt           one 4x4 row-major camera-to-world matrix per line
//   intrinsics.txt      "fx fy cx cy w h"
//   scene.json          structured scene description incl. bias spec

struct SynthParams {
  std::string preset = "room";
  int n_views = 12;
  int width = 128, height = 128;
  BiasSpec bias;
  uint64_t seed = 0;
};

/// Renders the oracle frames, injects the bias, and emits the directory.
/// Deterministic per (params, seed).
void write_synth_dataset(const std::string& out_dir, const SynthParams& params);

void save_poses_txt(const std::string& path, const std::vector<CameraPose>& cams);
void save_intrinsics_txt(const std::string& path, const CameraPose& cam);

}  // namespace ncrecon
