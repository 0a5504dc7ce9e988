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

#include "ncrecon/scene/analytic_scene.hpp"
#include "ncrecon/scene/bias.hpp"

namespace ncrecon {

std::string scene_to_json(const AnalyticScene& scene, const BiasSpec& bias, uint64_t seed);
AnalyticScene scene_from_json(const std::string& text);
BiasSpec bias_from_scene_json(const std::string& text);

void save_scene_json(const std::string& path, const AnalyticScene& scene, const BiasSpec& bias,
                     uint64_t seed);
AnalyticScene load_scene_json(const std::string& path);
BiasSpec load_bias_from_scene_json(const std::string& path);

}  // namespace ncrecon
