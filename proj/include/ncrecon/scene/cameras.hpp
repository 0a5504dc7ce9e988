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
#include <vector>

#include "ncrecon/scene/analytic_scene.hpp"
#include "ncrecon/scene/camera.hpp"

namespace ncrecon {

/// Jittered orbit of inward-looking cameras strictly inside the scene
/// bounds. Deterministic per seed; throws on degenerate bounds or n < 2.
std::vector<CameraPose> generate_cameras(const AnalyticScene& scene, int n_views, uint64_t seed,
                                         int width = 128, int height = 128,
                                         double fov_x_rad = 1.2217304763960306);  // 70 deg

}  // namespace ncrecon
