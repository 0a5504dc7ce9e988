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

#include "ncrecon/scene/dataset_writer.hpp"

#include <cinttypes>
#include <cstdio>
#include <filesystem>
#include <fstream>
#include <stdexcept>

#include "ncrecon/core/png_io.hpp"
#include "ncrecon/core/rng.hpp"
#include "ncrecon/io/nmb.hpp"
#include "ncrecon/io/scene_json.hpp"

namespace ncrecon {

namespace fs = std::filesystem;

void save_poses_txt(const std::string& path, const std::vector<CameraPose>& cams) {
  std::ofstream f(path);
  if (!f) throw std::runtime_error("save_poses_txt: cannot open " + path);
  f.precision(17);
  for (const auto& cam : cams) {
    // row-major 4x4 camera-to-world
    for (int r = 0; r < 3; r++) {
      for (int c = 0; c < 3; c++) f << cam.rotation(r, c) << " ";
      f << cam.translation[r] << " ";
    }
    f << "0 0 0 1\n";
  }
}

void save_intrinsics_txt(const std::string& path, const CameraPose& cam) {
  std::ofstream f(path);
  if (!f) throw std::runtime_error("save_intrinsics_txt: cannot open " + path);
  f.precision(17);
  f << cam.fx << " " << cam.fy << " " << cam.cx << " " << cam.cy << " " << cam.width << " "
    << cam.height << "\n";
}

void write_synth_dataset(const std::string& out_dir, const SynthParams& params) {
  AnalyticScene scene = make_scene_preset(params.preset);
  auto cams = generate_cameras(scene, params.n_views, params.seed, params.width, params.height);

  fs::create_directories(fs::path(out_dir) / "images");
  fs::create_directories(fs::path(out_dir) / "normals");
  fs::create_directories(fs::path(out_dir) / "normals_gt");
  fs::create_directories(fs::path(out_dir) / "depth");
  fs::create_directories(fs::path(out_dir) / "bias");

  char name[16];
  for (size_t v = 0; v < cams.size(); v++) {
    GTFrame frame = render_gt_frame(scene, cams[v]);
    BiasedNormals biased = inject_view_bias(frame, cams[v], params.bias, mix64(params.seed, v));

    std::snprintf(name, sizeof(name), "%03zu", v);
    write_png((fs::path(out_dir) / "images" / (std::string(name) + ".png")).string(),
              to_u8(frame.color));
    write_nmb((fs::path(out_dir) / "normals" / (std::string(name) + ".nmb")).string(),
              biased.normals);
    write_nmb((fs::path(out_dir) / "normals_gt" / (std::string(name) + ".nmb")).string(),
              frame.normal);
    write_nmb((fs::path(out_dir) / "depth" / (std::string(name) + ".nmb")).string(), frame.depth);

    ImageF rot(params.height, params.width, 3);
    for (int row = 0; row < params.height; row++)
      for (int col = 0; col < params.width; col++) {
        Vec3d aa = biased.rotations[size_t(row) * params.width + col];
        rot.set_rgb(row, col, Vec3f(aa));
      }
    write_nmb((fs::path(out_dir) / "bias" / (std::string(name) + ".nmb")).string(), rot);
  }

  save_poses_txt((fs::path(out_dir) / "poses.txt").string(), cams);
  save_intrinsics_txt((fs::path(out_dir) / "intrinsics.txt").string(), cams[0]);
  save_scene_json((fs::path(out_dir) / "scene.json").string(), scene, params.bias, params.seed);
}

}  // namespace ncrecon
