#include <doctest.h>

#include <filesystem>
#include <fstream>

#include "ncrecon/core/rng.hpp"
#include "ncrecon/scene/bias.hpp"
#include "ncrecon/scene/cameras.hpp"
#include "ncrecon/scene/dataset_writer.hpp"
#include "ncrecon/scene/sphere_trace.hpp"

using namespace ncrecon;

namespace {

AnalyticScene unit_sphere_scene() {
  AnalyticScene s;
  s.light_dir = normalize(s.light_dir);
  s.bounds = {{-2, -2, -2}, {2, 2, 2}};
  s.primitives.push_back({Primitive::Kind::sphere, {0, 0, 0}, {1, 1, 1}, {0.8f, 0.8f, 0.8f}});
  return s;
}

}  // namespace

TEST_CASE("scene_sdf on single primitives") {
  auto sphere = unit_sphere_scene();
  CHECK(scene_sdf(sphere, {0, 0, 2}) == doctest::Approx(1.0));
  CHECK(scene_sdf(sphere, {0, 0, 0}) == doctest::Approx(-1.0));

  AnalyticScene boxs;
  boxs.primitives.push_back({Primitive::Kind::box, {0, 0, 0}, {1, 1, 1}, {}});
  CHECK(scene_sdf(boxs, {2, 0, 0}) == doctest::Approx(1.0));
  CHECK(scene_sdf(boxs, {0, 0, 0}) == doctest::Approx(-1.0));
  CHECK(scene_sdf(boxs, {2, 2, 0}) == doctest::Approx(std::sqrt(2.0)));

  AnalyticScene shell;
  shell.primitives.push_back({Primitive::Kind::room_shell, {0, 0, 0}, {1, 1, 1}, {}});
  CHECK(scene_sdf(shell, {0, 0, 0}) == doctest::Approx(1.0));   // room interior is air
  CHECK(scene_sdf(shell, {0, 0, 0.5}) == doctest::Approx(0.5)); // distance to nearest wall
}

TEST_CASE("scene_sdf eikonal property away from seams") {
  auto scene = make_room_scene();
  Pcg32 rng(101);
  int checked = 0;
  while (checked < 1000) {
    Vec3d x{rng.uniform(-0.95, 0.95), rng.uniform(-0.95, 0.95), rng.uniform(-0.95, 0.95)};
    // skip CSG seams: two primitives nearly equidistant, or box ridge points
    double d0 = 1e9, d1 = 1e9;
    for (const auto& p : scene.primitives) {
      double d = primitive_sdf(p, x);
      if (d < d0) {
        d1 = d0;
        d0 = d;
      } else {
        d1 = std::min(d1, d);
      }
    }
    if (d1 - d0 < 0.02) continue;
    // skip internal ridges of box-like primitives
    const auto& p = scene.primitives[scene_nearest_primitive(scene, x)];
    if (p.kind != Primitive::Kind::sphere) {
      Vec3d q = vabs(x - p.center) - p.half_extents;
      double m0 = std::max(q.x, std::max(q.y, q.z));
      int near_face = 0;
      for (int i = 0; i < 3; i++)
        if (std::abs(q[i] - m0) < 0.02) near_face++;
      if (near_face > 1) continue;
      if (m0 > -0.02 && m0 < 0.02) continue;  // too close to the surface for the FD stencil
    } else if (std::abs(scene_sdf(scene, x)) < 0.02) {
      continue;
    }
    Vec3d g = scene_sdf_gradient(scene, x);
    CHECK(length(g) == doctest::Approx(1.0).epsilon(1e-3));
    checked++;
  }
}

TEST_CASE("sphere_trace frontal hit and miss") {
  auto scene = unit_sphere_scene();
  auto hit = sphere_trace(scene, {0, 0, 3}, {0, 0, -1});
  REQUIRE(hit.has_value());
  CHECK(hit->t == doctest::Approx(2.0).epsilon(1e-3));
  CHECK(hit->normal.z == doctest::Approx(1.0).epsilon(1e-4));
  CHECK(std::abs(scene_sdf(scene, hit->point)) < 1e-3);

  auto miss = sphere_trace(scene, {0, 0, 3}, {0, 0, 1});
  CHECK_FALSE(miss.has_value());
}

TEST_CASE("sphere_trace grazing box corner satisfies the hit post-condition") {
  AnalyticScene scene;
  scene.bounds = {{-2, -2, -2}, {2, 2, 2}};
  scene.primitives.push_back({Primitive::Kind::box, {0, 0, 0}, {0.5, 0.5, 0.5}, {}});
  // aim just inside the +x +y edge
  Vec3d origin{1.5, 1.5, 0.02};
  Vec3d dir = normalize(Vec3d{0.49, 0.49, 0.0} - origin);
  auto hit = sphere_trace(scene, origin, dir);
  REQUIRE(hit.has_value());
  CHECK(std::abs(scene_sdf(scene, hit->point)) < 1e-3);
}

TEST_CASE("generate_cameras determinism and validity") {
  auto scene = make_room_scene();
  auto a = generate_cameras(scene, 8, 0);
  auto b = generate_cameras(scene, 8, 0);
  REQUIRE(a.size() == 8);
  for (size_t i = 0; i < a.size(); i++) {
    CHECK(a[i].rotation.m == b[i].rotation.m);
    CHECK(a[i].translation.x == b[i].translation.x);
    CHECK(a[i].orthonormality_error() < 1e-6);
    CHECK(std::abs(a[i].rotation.det() - 1.0) < 1e-6);
    CHECK(scene.bounds.contains(a[i].translation));
    // strictly inside
    CHECK(scene_sdf(scene, a[i].translation) > 0.0);
  }
  auto c = generate_cameras(scene, 8, 1);
  CHECK(c[0].translation.x != a[0].translation.x);

  CHECK_THROWS(generate_cameras(scene, 1, 0));
  AnalyticScene degenerate = scene;
  degenerate.bounds = {{0, 0, 0}, {0, 0, 0}};
  CHECK_THROWS(generate_cameras(degenerate, 4, 0));
}

TEST_CASE("render_gt_frame planar wall and frontal sphere") {
  // camera facing the +z wall of a room shell
  AnalyticScene room;
  room.light_dir = normalize(room.light_dir);
  room.primitives.push_back({Primitive::Kind::room_shell, {0, 0, 0}, {1, 1, 1}, {0.8f, 0.8f, 0.8f}});
  CameraPose cam = make_look_at({0, 0, 0}, {0, 0, 1}, {0, 1, 0}, 0.9, 32, 32);
  GTFrame f = render_gt_frame(room, cam);
  Vec3f n0 = f.normal.rgb(16, 16);
  for (int r = 10; r < 22; r++)
    for (int c = 10; c < 22; c++) {
      CHECK(f.valid.at(r, c, 0) == 1);
      Vec3f n = f.normal.rgb(r, c);
      CHECK(length(n - n0) < 1e-4);  // constant over the wall
      CHECK(length(n) == doctest::Approx(1.0f).epsilon(1e-5));
      CHECK(f.depth.at(r, c, 0) > 0.0f);
    }
  CHECK(n0.z == doctest::Approx(-1.0f).epsilon(1e-4));

  // frontal sphere: center-pixel depth equals the analytic intersection
  auto sphere = unit_sphere_scene();
  CameraPose cam2 = make_look_at({0, 0, 3}, {0, 0, 0}, {0, 1, 0}, 0.9, 33, 33);
  cam2.cx = 16.5;  // center of pixel (16,16)
  cam2.cy = 16.5;
  GTFrame f2 = render_gt_frame(sphere, cam2);
  REQUIRE(f2.valid.at(16, 16, 0) == 1);
  CHECK(f2.depth.at(16, 16, 0) == doctest::Approx(2.0f).epsilon(1e-3));
}

TEST_CASE("inject_view_bias modes") {
  auto scene = make_room_scene();
  auto cams = generate_cameras(scene, 2, 3, 48, 48);
  GTFrame frame = render_gt_frame(scene, cams[0]);

  SUBCASE("mode none is the identity") {
    BiasSpec spec;
    auto out = inject_view_bias(frame, cams[0], spec, 0);
    CHECK(out.normals.data == frame.normal.data);
    for (const auto& r : out.rotations) CHECK(length(r) == 0.0);
  }

  SUBCASE("constant rotation about world z") {
    BiasSpec spec;
    spec.mode = BiasSpec::Mode::constant_per_view;
    spec.axis_rule = BiasSpec::AxisRule::fixed;
    spec.fixed_axis = {0, 0, 1};
    spec.amplitude = 10.0 * M_PI / 180.0;
    auto out = inject_view_bias(frame, cams[0], spec, 0);
    int tested = 0;
    for (int r = 0; r < frame.normal.height && tested < 200; r++)
      for (int c = 0; c < frame.normal.width && tested < 200; c++) {
        if (!frame.valid.at(r, c, 0)) continue;
        Vec3d n{frame.normal.at(r, c, 0), frame.normal.at(r, c, 1), frame.normal.at(r, c, 2)};
        Vec3d nb{out.normals.at(r, c, 0), out.normals.at(r, c, 1), out.normals.at(r, c, 2)};
        CHECK(length(nb) == doctest::Approx(1.0).epsilon(1e-5));
        if (std::abs(n.z) < 1e-6) {  // normals perpendicular to the axis rotate by the full angle
          CHECK(angle_between(n, nb) == doctest::Approx(spec.amplitude).epsilon(1e-4));
          tested++;
        }
      }
    CHECK(tested > 0);
  }

  SUBCASE("recorded rotation inverts exactly") {
    BiasSpec spec;
    spec.mode = BiasSpec::Mode::direction_dependent;
    spec.amplitude = 0.3;
    spec.noise_std = 0.05;
    auto out = inject_view_bias(frame, cams[0], spec, 7);
    for (int r = 0; r < frame.normal.height; r += 7)
      for (int c = 0; c < frame.normal.width; c += 5) {
        if (!frame.valid.at(r, c, 0)) continue;
        Vec3d aa = out.rotations[size_t(r) * frame.normal.width + c];
        Mat3d inv = axis_angle_to_rotation(aa).transposed();
        Vec3d nb{out.normals.at(r, c, 0), out.normals.at(r, c, 1), out.normals.at(r, c, 2)};
        Vec3d back = inv * nb;
        Vec3d n{frame.normal.at(r, c, 0), frame.normal.at(r, c, 1), frame.normal.at(r, c, 2)};
        CHECK(length(back - n) < 1e-6);
      }
  }

  SUBCASE("amplitude outside the cap is rejected") {
    BiasSpec spec;
    spec.mode = BiasSpec::Mode::constant_per_view;
    spec.amplitude = 1.0;  // > pi/4
    CHECK_THROWS(inject_view_bias(frame, cams[0], spec, 0));
  }
}

TEST_CASE("synth dataset emission is deterministic per seed") {
  namespace fs = std::filesystem;
  SynthParams params;
  params.preset = "smoke";
  params.n_views = 2;
  params.width = 24;
  params.height = 24;
  params.seed = 5;
  auto dir_a = fs::temp_directory_path() / "ncrecon_synth_a";
  auto dir_b = fs::temp_directory_path() / "ncrecon_synth_b";
  fs::remove_all(dir_a);
  fs::remove_all(dir_b);
  write_synth_dataset(dir_a.string(), params);
  write_synth_dataset(dir_b.string(), params);

  for (auto rel : {"images/000.png", "normals/001.nmb", "poses.txt", "scene.json"}) {
    std::ifstream fa(dir_a / rel, std::ios::binary), fb(dir_b / rel, std::ios::binary);
    REQUIRE(fa);
    REQUIRE(fb);
    std::string sa((std::istreambuf_iterator<char>(fa)), {});
    std::string sb((std::istreambuf_iterator<char>(fb)), {});
    CHECK(sa == sb);
  }
  fs::remove_all(dir_a);
  fs::remove_all(dir_b);
}
