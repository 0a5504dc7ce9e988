#include <doctest.h>

#include <cstdio>
#include <filesystem>

#include "ncrecon/core/image.hpp"
#include "ncrecon/core/png_io.hpp"
#include "ncrecon/core/rng.hpp"
#include "ncrecon/core/threading.hpp"
#include "ncrecon/core/vec.hpp"

using namespace ncrecon;

TEST_CASE("vec basics") {
  Vec3d a{1, 2, 3}, b{4, 5, 6};
  CHECK(dot(a, b) == doctest::Approx(32.0));
  auto c = cross(Vec3d{1, 0, 0}, Vec3d{0, 1, 0});
  CHECK(c.z == doctest::Approx(1.0));
  CHECK(length(normalize(b)) == doctest::Approx(1.0));
}

TEST_CASE("rotation helpers round trip") {
  Pcg32 rng(7);
  for (int i = 0; i < 200; i++) {
    Vec3d axis = normalize(Vec3d{rng.uniform(-1.0, 1.0), rng.uniform(-1.0, 1.0), rng.uniform(-1.0, 1.0)});
    double angle = rng.uniform(0.0, 3.0);
    Mat3d r = rotation_axis_angle(axis, angle);
    CHECK(std::abs(r.det() - 1.0) < 1e-12);
    Vec3d aa = rotation_to_axis_angle(r);
    Mat3d r2 = axis_angle_to_rotation(aa);
    for (int k = 0; k < 9; k++) CHECK(r.m[k] == doctest::Approx(r2.m[k]).epsilon(1e-9));
  }
}

TEST_CASE("aabb slab intersection") {
  Aabb3d box{{-1, -1, -1}, {1, 1, 1}};
  double t0, t1;
  CHECK(box.intersect({0, 0, 3}, {0, 0, -1}, t0, t1));
  CHECK(t0 == doctest::Approx(2.0));
  CHECK(t1 == doctest::Approx(4.0));
  CHECK_FALSE(box.intersect({0, 0, 3}, {0, 0, 1}, t0, t1));
}

TEST_CASE("pcg32 determinism and range") {
  Pcg32 a(42), b(42);
  for (int i = 0; i < 1000; i++) CHECK(a.next() == b.next());
  Pcg32 c(7);
  for (int i = 0; i < 1000; i++) {
    float f = c.next_float();
    CHECK(f >= 0.0f);
    CHECK(f < 1.0f);
    CHECK(c.next_below(17) < 17u);
  }
}

TEST_CASE("parallel_for covers every index once") {
  set_thread_count(2);
  std::vector<int> hits(1000, 0);
  parallel_for(1000, [&](int64_t i) { hits[i]++; });
  for (int h : hits) CHECK(h == 1);
  set_thread_count(1);
}

TEST_CASE("png round trip") {
  ImageU8 img(13, 17, 3);
  Pcg32 rng(3);
  for (auto& v : img.data) v = uint8_t(rng.next() & 0xff);
  auto path = std::filesystem::temp_directory_path() / "ncrecon_test_rt.png";
  write_png(path.string(), img);
  ImageU8 back = read_png(path.string());
  REQUIRE(back.height == img.height);
  REQUIRE(back.width == img.width);
  REQUIRE(back.channels == img.channels);
  CHECK(back.data == img.data);
  std::filesystem::remove(path);
}

TEST_CASE("bilinear resize constant image stays constant") {
  ImageF img(8, 8, 3, 0.25f);
  auto out = resize_bilinear(img, 21, 13);
  for (float v : out.data) CHECK(v == doctest::Approx(0.25f));
}
