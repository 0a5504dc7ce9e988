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

#include <string>
#include <vector>

#include "ncrecon/core/image.hpp"
#include "ncrecon/scene/analytic_scene.hpp"
#include "ncrecon/scene/bias.hpp"
#include "ncrecon/scene/camera.hpp"

namespace ncrecon {

/// Uniform scale + translation (rotation fixed to identity):
/// x' = scale * x + translation.
struct SimilarityTransform {
  double scale = 1.0;
  Vec3d translation{0, 0, 0};

  Vec3d apply(Vec3d x) const { return x * scale + translation; }
  Vec3d inverse(Vec3d x) const { return (x - translation) / scale; }
};

/// Maps the box so its longest axis spans 1.8 centered at the origin.
/// Throws DataError on degenerate bounds.
SimilarityTransform normalize_scene(const Aabb3d& bounds);

struct DatasetFrame {
  ImageF image;         // H x W x 3 in [0,1]
  ImageF prior_normal;  // H x W x 3 unit normals, world frame after load
  MaskImage valid;      // H x W x 1
  CameraPose cam;       // pose in normalized coordinates
  // optional oracle assets
  ImageF gt_depth;   // original world units (ray distance)
  ImageF gt_normal;  // world frame
  ImageF bias_aa;    // recorded injected rotations, axis-angle
};

enum class NormalFrameConvention { world, camera };
enum class DatasetLayout { synth, scannet };

struct Dataset {
  std::vector<DatasetFrame> frames;
  Aabb3d bounds_world;        // original coordinates
  Aabb3d bounds;              // normalized coordinates (training domain)
  SimilarityTransform norm;   // world -> normalized
  AnalyticScene scene;        // present for synthetic data
  bool has_scene = false;
  BiasSpec bias;
  bool has_gt = false;

  int width() const { return frames.empty() ? 0 : frames[0].image.width; }
  int height() const { return frames.empty() ? 0 : frames[0].image.height; }
};

/// Loads a dataset directory. Priors given in camera frame are rotated to
/// world; priors at a different resolution are bilinearly resized to the
/// image resolution and re-normalized. Validation failures raise DataError
/// with distinct messages (missing files, non-orthonormal poses,
/// resolution mismatches).
Dataset load_dataset(const std::string& path,
                     NormalFrameConvention convention = NormalFrameConvention::world,
                     DatasetLayout layout = DatasetLayout::synth);

std::vector<CameraPose> load_poses_txt(const std::string& path, double fx, double fy, double cx,
                                       double cy, int width, int height);

}  // namespace ncrecon
