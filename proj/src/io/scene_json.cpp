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

#include "ncrecon/io/scene_json.hpp"

#include <json.hpp>

#include <fstream>
#include <stdexcept>

namespace ncrecon {

using nlohmann::json;

namespace {

json vec_to_json(Vec3d v) { return json::array({v.x, v.y, v.z}); }
json vec_to_json(Vec3f v) { return json::array({v.x, v.y, v.z}); }

Vec3d vec3d_from_json(const json& j) { return {j.at(0).get<double>(), j.at(1).get<double>(), j.at(2).get<double>()}; }
Vec3f vec3f_from_json(const json& j) { return {j.at(0).get<float>(), j.at(1).get<float>(), j.at(2).get<float>()}; }

std::string kind_to_string(Primitive::Kind k) {
  switch (k) {
    case Primitive::Kind::sphere: return "sphere";
    case Primitive::Kind::box: return "box";
    case Primitive::Kind::room_shell: return "room_shell";
  }
  return "sphere";
}

Primitive::Kind kind_from_string(const std::string& s) {
  if (s == "sphere") return Primitive::Kind::sphere;
  if (s == "box") return Primitive::Kind::box;
  if (s == "room_shell") return Primitive::Kind::room_shell;
  throw std::runtime_error("scene json: unknown primitive kind " + s);
}

std::string axis_rule_to_string(BiasSpec::AxisRule r) {
  return r == BiasSpec::AxisRule::fixed ? "fixed" : "view";
}

}  // namespace

std::string scene_to_json(const AnalyticScene& scene, const BiasSpec& bias, uint64_t seed) {
  json j;
  j["name"] = scene.name;
  j["bounds"] = {{"lo", vec_to_json(scene.bounds.lo)}, {"hi", vec_to_json(scene.bounds.hi)}};
  j["light_dir"] = vec_to_json(scene.light_dir);
  j["ambient"] = scene.ambient;
  j["seed"] = seed;
  j["primitives"] = json::array();
  for (const auto& p : scene.primitives) {
    j["primitives"].push_back({{"kind", kind_to_string(p.kind)},
                               {"center", vec_to_json(p.center)},
                               {"half_extents", vec_to_json(p.half_extents)},
                               {"albedo", vec_to_json(p.albedo)}});
  }
  j["bias"] = {{"mode", BiasSpec::mode_to_string(bias.mode)},
               {"axis_rule", axis_rule_to_string(bias.axis_rule)},
               {"fixed_axis", vec_to_json(bias.fixed_axis)},
               {"amplitude", bias.amplitude},
               {"noise_std", bias.noise_std}};
  return j.dump(2);
}

AnalyticScene scene_from_json(const std::string& text) {
  json j = json::parse(text);
  AnalyticScene s;
  s.name = j.at("name").get<std::string>();
  s.bounds.lo = vec3d_from_json(j.at("bounds").at("lo"));
  s.bounds.hi = vec3d_from_json(j.at("bounds").at("hi"));
  s.light_dir = vec3d_from_json(j.at("light_dir"));
  s.ambient = j.at("ambient").get<float>();
  for (const auto& pj : j.at("primitives")) {
    Primitive p;
    p.kind = kind_from_string(pj.at("kind").get<std::string>());
    p.center = vec3d_from_json(pj.at("center"));
    p.half_extents = vec3d_from_json(pj.at("half_extents"));
    p.albedo = vec3f_from_json(pj.at("albedo"));
    s.primitives.push_back(p);
  }
  return s;
}

BiasSpec bias_from_scene_json(const std::string& text) {
  json j = json::parse(text);
  BiasSpec b;
  if (!j.contains("bias")) return b;
  const auto& bj = j.at("bias");
  b.mode = BiasSpec::mode_from_string(bj.at("mode").get<std::string>());
  b.axis_rule = bj.at("axis_rule").get<std::string>() == "fixed" ? BiasSpec::AxisRule::fixed
                                                                 : BiasSpec::AxisRule::view;
  b.fixed_axis = vec3d_from_json(bj.at("fixed_axis"));
  b.amplitude = bj.at("amplitude").get<double>();
  b.noise_std = bj.at("noise_std").get<double>();
  return b;
}

void save_scene_json(const std::string& path, const AnalyticScene& scene, const BiasSpec& bias,
                     uint64_t seed) {
  std::ofstream f(path);
  if (!f) throw std::runtime_error("save_scene_json: cannot open " + path);
  f << scene_to_json(scene, bias, seed) << "\n";
}

static std::string read_text_file(const std::string& path) {
  std::ifstream f(path);
  if (!f) throw std::runtime_error("cannot open " + path);
  return {std::istreambuf_iterator<char>(f), std::istreambuf_iterator<char>()};
}

AnalyticScene load_scene_json(const std::string& path) { return scene_from_json(read_text_file(path)); }

BiasSpec load_bias_from_scene_json(const std::string& path) {
  return bias_from_scene_json(read_text_file(path));
}

}  // namespace ncrecon
