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

#include "ncrecon/io/dataset.hpp"

#include <algorithm>
#include <filesystem>
#include <fstream>
#include <sstream>

#include "ncrecon/core/errors.hpp"
#include "ncrecon/core/png_io.hpp"
#include "ncrecon/io/nmb.hpp"
#include "ncrecon/io/scene_json.hpp"

namespace ncrecon {

namespace fs = std::filesystem;

SimilarityTransform normalize_scene(const Aabb3d& bounds) {
  if (bounds.degenerate()) throw DataError("normalize_scene: degenerate bounds");
  Vec3d ext = bounds.extent();
  double longest = std::max(ext.x, std::max(ext.y, ext.z));
  SimilarityTransform t;
  t.scale = 1.8 / longest;
  t.translation = bounds.center() * -t.scale;
  return t;
}

std::vector<CameraPose> load_poses_txt(const std::string& path, double fx, double fy, double cx,
                                       double cy, int width, int height) {
  std::ifstream f(path);
  if (!f) throw DataError("missing poses file: " + path);
  std::vector<CameraPose> cams;
  std::string line;
  while (std::getline(f, line)) {
    if (line.empty()) continue;
    std::istringstream ss(line);
    double m[16];
    for (int i = 0; i < 16; i++)
      if (!(ss >> m[i])) throw DataError("malformed pose line in " + path);
    CameraPose cam;
    for (int r = 0; r < 3; r++) {
      for (int c = 0; c < 3; c++) cam.rotation(r, c) = m[4 * r + c];
      cam.translation[r] = m[4 * r + 3];
    }
    cam.fx = fx;
    cam.fy = fy;
    cam.cx = cx;
    cam.cy = cy;
    cam.width = width;
    cam.height = height;
    cams.push_back(cam);
  }
  return cams;
}

namespace {

std::vector<std::string> sorted_files(const fs::path& dir, const std::string& ext) {
  std::vector<std::string> out;
  if (!fs::exists(dir)) return out;
  for (const auto& e : fs::directory_iterator(dir))
    if (e.path().extension() == ext) out.push_back(e.path().string());
  std::sort(out.begin(), out.end());
  return out;
}

void renormalize_normals(ImageF& n) {
  for (int r = 0; r < n.height; r++)
    for (int c = 0; c < n.width; c++) {
      Vec3f v = n.rgb(r, c);
      float len = length(v);
      if (len > 1e-6f) n.set_rgb(r, c, v / len);
    }
}

}  // namespace

Dataset load_dataset(const std::string& path, NormalFrameConvention convention,
                     DatasetLayout layout) {
  fs::path root(path);
  if (!fs::exists(root)) throw DataError("dataset directory not found: " + path);

  Dataset ds;

  // intrinsics
  fs::path intr = root / "intrinsics.txt";
  if (!fs::exists(intr)) throw DataError("missing intrinsics.txt in " + path);
  double fx, fy, cx, cy;
  int w, h;
  {
    std::ifstream f(intr);
    if (!(f >> fx >> fy >> cx >> cy >> w >> h))
      throw DataError("malformed intrinsics.txt in " + path);
  }

  // poses
  std::vector<CameraPose> cams;
  if (layout == DatasetLayout::synth) {
    cams = load_poses_txt((root / "poses.txt").string(), fx, fy, cx, cy, w, h);
  } else {
    auto pose_files = sorted_files(root / "pose", ".txt");
    if (pose_files.empty()) throw DataError("missing pose/ directory in " + path);
    for (const auto& pf : pose_files) {
      auto one = load_poses_txt(pf, fx, fy, cx, cy, w, h);
      if (one.size() != 1) throw DataError("expected one pose per file: " + pf);
      cams.push_back(one[0]);
    }
  }
  if (cams.empty()) throw DataError("no poses found in " + path);
  for (size_t i = 0; i < cams.size(); i++)
    if (cams[i].orthonormality_error() > 1e-3)
      throw DataError("non-orthonormal pose " + std::to_string(i) + " in " + path);

  // images and priors
  auto image_files = sorted_files(root / "images", ".png");
  auto prior_files = sorted_files(root / "normals", ".nmb");
  if (image_files.empty()) throw DataError("missing images/ in " + path);
  if (prior_files.size() != image_files.size())
    throw DataError("images/ and normals/ count mismatch in " + path);
  if (image_files.size() != cams.size())
    throw DataError("frame count does not match pose count in " + path);

  auto gt_normal_files = sorted_files(root / "normals_gt", ".nmb");
  auto depth_files = sorted_files(root / "depth", ".nmb");
  auto bias_files = sorted_files(root / "bias", ".nmb");
  ds.has_gt = gt_normal_files.size() == image_files.size() &&
              depth_files.size() == image_files.size();

  // scene description (synthetic datasets)
  fs::path scene_path = root / "scene.json";
  if (fs::exists(scene_path)) {
    ds.scene = load_scene_json(scene_path.string());
    ds.bias = load_bias_from_scene_json(scene_path.string());
    ds.has_scene = true;
    ds.bounds_world = ds.scene.bounds;
  }

  ds.frames.resize(image_files.size());
  for (size_t i = 0; i < image_files.size(); i++) {
    DatasetFrame& fr = ds.frames[i];
    fr.image = to_float(read_png(image_files[i]));
    if (fr.image.channels != 3) throw DataError("expected RGB image: " + image_files[i]);
    if (fr.image.width != w || fr.image.height != h)
      throw DataError("image resolution mismatch with intrinsics: " + image_files[i]);

    fr.prior_normal = read_nmb(prior_files[i]);
    if (fr.prior_normal.channels != 3)
      throw DataError("expected 3-channel normal map: " + prior_files[i]);
    if (fr.prior_normal.width != w || fr.prior_normal.height != h) {
      fr.prior_normal = resize_bilinear(fr.prior_normal, h, w);
      renormalize_normals(fr.prior_normal);
    }
    if (convention == NormalFrameConvention::camera) {
      // rotate camera-frame priors into world space
      const Mat3d& r = cams[i].rotation;
      for (int row = 0; row < h; row++)
        for (int col = 0; col < w; col++) {
          Vec3d n{fr.prior_normal.at(row, col, 0), fr.prior_normal.at(row, col, 1),
                  fr.prior_normal.at(row, col, 2)};
          Vec3d wn = r * n;
          fr.prior_normal.set_rgb(row, col, Vec3f(wn));
        }
    }

    fr.cam = cams[i];
    if (i < gt_normal_files.size()) fr.gt_normal = read_nmb(gt_normal_files[i]);
    if (i < depth_files.size()) fr.gt_depth = read_nmb(depth_files[i]);
    if (i < bias_files.size()) fr.bias_aa = read_nmb(bias_files[i]);

    fr.valid = MaskImage(h, w, 1, 1);
    if (!fr.gt_depth.empty())
      for (int row = 0; row < h; row++)
        for (int col = 0; col < w; col++)
          fr.valid.at(row, col, 0) = fr.gt_depth.at(row, col, 0) > 0 ? 1 : 0;

    // priors must be unit length after conversion
    for (int row = 0; row < h; row += 7)
      for (int col = 0; col < w; col += 7) {
        if (!fr.valid.at(row, col, 0)) continue;
        float len = length(fr.prior_normal.rgb(row, col));
        if (std::abs(len - 1.0f) > 1e-3f)
          throw DataError("prior normal not unit length in " + prior_files[i]);
      }
  }

  if (!ds.has_scene) {
    // fall back to the camera hull, generously expanded
    Aabb3d box{cams[0].translation, cams[0].translation};
    for (const auto& c : cams) {
      box.lo = vmin(box.lo, c.translation);
      box.hi = vmax(box.hi, c.translation);
    }
    Vec3d pad = vmax(box.extent() * 1.0, Vec3d{1.0, 1.0, 1.0});
    ds.bounds_world = {box.lo - pad, box.hi + pad};
  }

  ds.norm = normalize_scene(ds.bounds_world);
  for (auto& fr : ds.frames) fr.cam.translation = ds.norm.apply(fr.cam.translation);
  ds.bounds = {ds.norm.apply(ds.bounds_world.lo), ds.norm.apply(ds.bounds_world.hi)};
  return ds;
}

}  // namespace ncrecon
