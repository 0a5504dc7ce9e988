#include <doctest.h>

#include <vector>

#include "ncrecon/core/rng.hpp"
#include "ncrecon/fields/geometry_field.hpp"
#include "ncrecon/fields/rotation.hpp"
#include "ncrecon/fields/sample_fields.hpp"

using namespace ncrecon;

namespace {

FieldConfig reduced_config() {
  FieldConfig cfg;
  cfg.smooth_width = 8;
  cfg.decoder_width = 8;
  cfg.color_width = 8;
  cfg.comp_width = 8;
  cfg.feat_dim = 8;
  cfg.pe_x_freqs = 6;
  cfg.pe_v_freqs = 4;
  cfg.grid.levels = 2;
  cfg.grid.channels = 4;
  cfg.grid.base_res = 4;
  cfg.grid.finest_res = 4;  // level 1 bumps to 5 to stay strictly increasing
  return cfg;
}

// scalar probe loss over one jet evaluation
struct ProbeVectors {
  double c_s;
  std::vector<double> c_fg;
  Vec3d c_n;
};

double probe_loss(HybridGeometryField<double>& field, Vec3d x, const ProbeVectors& pv,
                  HybridGeometryField<double>::Tape& tape) {
  field.eval_jet(x, tape);
  double loss = pv.c_s * tape.s;
  for (int i = 0; i < field.cfg.feat_dim; i++) loss += pv.c_fg[i] * tape.fg[i];
  loss += dot(pv.c_n, tape.n);
  return loss;
}

}  // namespace

TEST_CASE("positional_encoding worked examples") {
  double x[3] = {0, 0, 0};
  double out[39];
  positional_encoding(x, 3, 6, out);
  CHECK(positional_encoding_size(3, 6) == 39);
  for (int i = 0; i < 3; i++) CHECK(out[i] == 0.0);
  for (int k = 0; k < 6; k++)
    for (int i = 0; i < 3; i++) {
      CHECK(out[3 + 6 * k + i] == doctest::Approx(0.0));      // sin
      CHECK(out[3 + 6 * k + 3 + i] == doctest::Approx(1.0));  // cos
    }

  double x2[3] = {0.3, -0.2, 0.9};
  double out2[3];
  positional_encoding(x2, 3, 0, out2);
  for (int i = 0; i < 3; i++) CHECK(out2[i] == x2[i]);
}

TEST_CASE("positional_encoding_jet matches finite differences") {
  Pcg32 rng(3);
  const int d = 3, nf = 4;
  const int w = positional_encoding_size(d, nf);
  std::vector<double> out(w), tan(3 * w), op(w), om(w);
  for (int trial = 0; trial < 20; trial++) {
    double x[3] = {rng.uniform(-1.0, 1.0), rng.uniform(-1.0, 1.0), rng.uniform(-1.0, 1.0)};
    double eye[9] = {1, 0, 0, 0, 1, 0, 0, 0, 1};
    positional_encoding_jet(x, eye, d, nf, out.data(), tan.data());
    const double h = 1e-6;
    for (int k = 0; k < 3; k++) {
      double xp[3] = {x[0], x[1], x[2]}, xm[3] = {x[0], x[1], x[2]};
      xp[k] += h;
      xm[k] -= h;
      positional_encoding(xp, d, nf, op.data());
      positional_encoding(xm, d, nf, om.data());
      for (int i = 0; i < w; i++)
        CHECK(tan[k * w + i] == doctest::Approx((op[i] - om[i]) / (2 * h)).epsilon(1e-5));
    }
  }
}

TEST_CASE("grid trilinear interpolation oracle") {
  GridConfig gc;
  gc.levels = 2;
  gc.channels = 4;
  gc.base_res = 4;
  gc.finest_res = 8;
  MultiResGrid<double> grid;
  grid.init(gc);
  Pcg32 rng(9);
  for (auto& lev : grid.levels)
    for (auto& v : lev.data) v = rng.uniform(-1.0, 1.0);

  SUBCASE("vertex query returns the vertex feature") {
    const auto& lev = grid.levels[0];
    int res = lev.res;
    int ix = 2, iy = 1, iz = 3;
    double x[3] = {2.0 * ix / (res - 1) - 1.0, 2.0 * iy / (res - 1) - 1.0,
                   2.0 * iz / (res - 1) - 1.0};
    std::vector<double> f(grid.feature_dim());
    grid.interp(x, f.data());
    size_t base = ((size_t(iz) * res + iy) * res + ix) * gc.channels;
    for (int c = 0; c < gc.channels; c++) CHECK(f[c] == doctest::Approx(lev.data[base + c]));
  }

  SUBCASE("cell center is the mean of 8 corners") {
    const auto& lev = grid.levels[0];
    int res = lev.res;
    double x[3];
    for (int k = 0; k < 3; k++) x[k] = 2.0 * (0.5) / (res - 1) - 1.0;  // center of cell (0,0,0)
    std::vector<double> f(grid.feature_dim());
    grid.interp(x, f.data());
    for (int c = 0; c < gc.channels; c++) {
      double mean = 0;
      for (int corner = 0; corner < 8; corner++) {
        int dx = corner & 1, dy = (corner >> 1) & 1, dz = (corner >> 2) & 1;
        mean += lev.data[((size_t(dz) * res + dy) * res + dx) * gc.channels + c];
      }
      CHECK(f[c] == doctest::Approx(mean / 8.0));
    }
  }

  SUBCASE("arbitrary point matches a brute-force weighted sum") {
    for (int trial = 0; trial < 50; trial++) {
      double x[3] = {rng.uniform(-0.99, 0.99), rng.uniform(-0.99, 0.99), rng.uniform(-0.99, 0.99)};
      std::vector<double> f(grid.feature_dim());
      grid.interp(x, f.data());
      for (int l = 0; l < gc.levels; l++) {
        const auto& lev = grid.levels[l];
        int res = lev.res;
        // independent oracle: explicit weights over the 8 enclosing corners
        double u[3];
        for (int k = 0; k < 3; k++) u[k] = (x[k] + 1.0) * 0.5 * (res - 1);
        int i0[3];
        double fr[3];
        for (int k = 0; k < 3; k++) {
          i0[k] = std::min(int(u[k]), res - 2);
          fr[k] = u[k] - i0[k];
        }
        for (int c = 0; c < gc.channels; c++) {
          double acc = 0;
          for (int dz = 0; dz <= 1; dz++)
            for (int dy = 0; dy <= 1; dy++)
              for (int dx = 0; dx <= 1; dx++) {
                double w = (dx ? fr[0] : 1 - fr[0]) * (dy ? fr[1] : 1 - fr[1]) *
                           (dz ? fr[2] : 1 - fr[2]);
                acc += w * lev.data[((size_t(i0[2] + dz) * res + (i0[1] + dy)) * res +
                                     (i0[0] + dx)) * gc.channels + c];
              }
          CHECK(f[l * gc.channels + c] == doctest::Approx(acc).epsilon(1e-12));
        }
      }
    }
  }

  SUBCASE("tangents match finite differences") {
    typename MultiResGrid<double>::CellCache cache;
    std::vector<double> f(grid.feature_dim()), tan(3 * grid.feature_dim());
    std::vector<double> fp(grid.feature_dim()), fm(grid.feature_dim());
    for (int trial = 0; trial < 30; trial++) {
      double x[3] = {rng.uniform(-0.9, 0.9), rng.uniform(-0.9, 0.9), rng.uniform(-0.9, 0.9)};
      grid.interp_jet(x, f.data(), tan.data(), cache);
      const double h = 1e-7;
      for (int k = 0; k < 3; k++) {
        double xp[3] = {x[0], x[1], x[2]}, xm[3] = {x[0], x[1], x[2]};
        xp[k] += h;
        xm[k] -= h;
        grid.interp(xp, fp.data());
        grid.interp(xm, fm.data());
        for (int i = 0; i < grid.feature_dim(); i++) {
          double fd = (fp[i] - fm[i]) / (2 * h);
          CHECK(tan[k * grid.feature_dim() + i] == doctest::Approx(fd).epsilon(1e-4));
        }
      }
    }
  }
}

TEST_CASE("compensate_normal worked examples and ZYX order") {
  // identity
  Vec3d n{0.3, -0.5, 0.8};
  Vec3d id = compensate_normal(n, 0.0, 0.0, 0.0);
  CHECK(length(id - n) < 1e-15);

  // quarter turn about z
  Vec3d e1 = compensate_normal(Vec3d{1, 0, 0}, 0.0, 0.0, M_PI / 2);
  CHECK(e1.x == doctest::Approx(0.0));
  CHECK(e1.y == doctest::Approx(1.0));

  // R_X(pi/2) applied by hand: (0,0,1) -> (0,-1,0)
  Vec3d e2 = compensate_normal(Vec3d{0, 0, 1}, M_PI / 2, 0.0, 0.0);
  CHECK(e2.x == doctest::Approx(0.0));
  CHECK(e2.y == doctest::Approx(-1.0));
  CHECK(e2.z == doctest::Approx(0.0).epsilon(1e-12));

  // property: matches explicit Rz*Ry*Rx product, preserves norm
  Pcg32 rng(41);
  for (int i = 0; i < 1000; i++) {
    double g = rng.uniform(-1.5, 1.5), b = rng.uniform(-1.5, 1.5), t = rng.uniform(-1.5, 1.5);
    Vec3d v{rng.uniform(-2.0, 2.0), rng.uniform(-2.0, 2.0), rng.uniform(-2.0, 2.0)};
    Mat3d explicit_r = rotation_z(t) * (rotation_y(b) * rotation_x(g));
    Vec3d want = explicit_r * v;
    Vec3d got = compensate_normal(v, g, b, t);
    CHECK(length(got - want) < 1e-6);
    CHECK(length(got) == doctest::Approx(length(v)).epsilon(1e-9));
  }
}

TEST_CASE("rotation backward matches finite differences") {
  Pcg32 rng(5);
  for (int trial = 0; trial < 50; trial++) {
    double ang[3] = {rng.uniform(-1.0, 1.0), rng.uniform(-1.0, 1.0), rng.uniform(-1.0, 1.0)};
    Vec3d n{rng.uniform(-1.0, 1.0), rng.uniform(-1.0, 1.0), rng.uniform(-1.0, 1.0)};
    Vec3d ob{rng.uniform(-1.0, 1.0), rng.uniform(-1.0, 1.0), rng.uniform(-1.0, 1.0)};

    RotationZYX<double> rot;
    rot.set(ang[0], ang[1], ang[2]);
    Vec3d n_bar{0, 0, 0};
    double a_bar[3] = {0, 0, 0};
    rot.backward(n, ob, n_bar, a_bar);

    const double h = 1e-6;
    for (int k = 0; k < 3; k++) {
      double ap[3] = {ang[0], ang[1], ang[2]}, am[3] = {ang[0], ang[1], ang[2]};
      ap[k] += h;
      am[k] -= h;
      double lp = dot(ob, compensate_normal(n, ap[0], ap[1], ap[2]));
      double lm = dot(ob, compensate_normal(n, am[0], am[1], am[2]));
      CHECK(a_bar[k] == doctest::Approx((lp - lm) / (2 * h)).epsilon(1e-5));
    }
    for (int k = 0; k < 3; k++) {
      Vec3d np = n, nm = n;
      np[k] += h;
      nm[k] -= h;
      double lp = dot(ob, rot.apply(np)), lm = dot(ob, rot.apply(nm));
      CHECK(n_bar[k] == doctest::Approx((lp - lm) / (2 * h)).epsilon(1e-6));
    }
  }
}

TEST_CASE("geometry field: sphere init, purity, zero grids") {
  auto cfg = reduced_config();
  cfg.smooth_width = 32;
  cfg.decoder_width = 32;
  cfg.feat_dim = 16;
  HybridGeometryField<double> field;
  field.init(cfg, 1);
  HybridGeometryField<double>::Tape tape;

  // geometric initialization: negative inside, positive at cube corners
  CHECK(field.eval({0, 0, 0}, tape) < 0.0);
  for (int c = 0; c < 8; c++) {
    Vec3d corner{c & 1 ? 1.0 : -1.0, c & 2 ? 1.0 : -1.0, c & 4 ? 1.0 : -1.0};
    CHECK(field.eval(corner, tape) > 0.0);
  }

  // purity: identical inputs give bit-identical outputs
  double s1 = field.eval({0.3, -0.2, 0.5}, tape);
  std::vector<double> fg1(tape.fg, tape.fg + cfg.feat_dim);
  double s2 = field.eval({0.3, -0.2, 0.5}, tape);
  CHECK(s1 == s2);
  for (int i = 0; i < cfg.feat_dim; i++) CHECK(fg1[i] == tape.fg[i]);

  // zero-initialized grids: output equals the smooth-branch-only field
  HybridGeometryField<double> mlp_only;
  auto cfg2 = cfg;
  cfg2.use_grid = false;
  mlp_only.init(cfg2, 1);
  // transplant identical mlp weights (decoder widths differ in input dim,
  // so compare against a field whose grid features stay zero instead)
  HybridGeometryField<double>::Tape t2;
  double sa = field.eval({0.21, 0.11, -0.47}, tape);
  // grid features are zero at init: value must not depend on query cell
  for (auto& lev : field.grid.levels)
    for (auto& v : lev.data) CHECK(v == 0.0);
  // jet and value paths agree
  field.eval_jet({0.21, 0.11, -0.47}, t2);
  CHECK(sa == doctest::Approx(t2.s).epsilon(1e-14));
}

TEST_CASE("sdf_normal matches finite differences at 100 interior points") {
  auto cfg = reduced_config();
  HybridGeometryField<double> field;
  field.init(cfg, 2);
  Pcg32 rng(7);
  // non-zero grid features so the grid path contributes
  for (auto& lev : field.grid.levels)
    for (auto& v : lev.data) v = rng.uniform(-0.05, 0.05);

  HybridGeometryField<double>::Tape tape, tp;
  const double h = 1e-3;
  int checked = 0;
  while (checked < 100) {
    Vec3d x{rng.uniform(-0.9, 0.9), rng.uniform(-0.9, 0.9), rng.uniform(-0.9, 0.9)};
    // stay away from grid cell boundaries where trilinear kinks live
    bool near_boundary = false;
    for (const auto& lev : field.grid.levels) {
      for (int k = 0; k < 3; k++) {
        double u = (x[k] + 1.0) * 0.5 * (lev.res - 1);
        double frac = u - std::floor(u);
        double du = h * 0.5 * (lev.res - 1);
        if (frac < 2 * du || frac > 1 - 2 * du) near_boundary = true;
      }
    }
    if (near_boundary) continue;
    field.eval_jet(x, tape);
    for (int k = 0; k < 3; k++) {
      Vec3d xp = x, xm = x;
      xp[k] += h;
      xm[k] -= h;
      double fd = (field.eval(xp, tp) - field.eval(xm, tp)) / (2 * h);
      CHECK(std::abs(tape.n[k] - fd) <= 1e-2 * std::max(std::abs(fd), 1e-3));
    }
    checked++;
  }

  // gradient of a linear field is constant: overwrite with explicit linear map
  // by zeroing nets is impractical; instead check jet linearity on the grid
  // alone via a single-level constant-gradient feature field.
}

TEST_CASE("geometry parameter gradients match finite differences (reduced config)") {
  auto cfg = reduced_config();
  HybridGeometryField<double> field;
  field.init(cfg, 3);
  Pcg32 rng(13);
  for (auto& lev : field.grid.levels)
    for (auto& v : lev.data) v = rng.uniform(-0.2, 0.2);

  ProbeVectors pv;
  pv.c_s = rng.uniform(-1.0, 1.0);
  pv.c_fg.resize(cfg.feat_dim);
  for (auto& c : pv.c_fg) c = rng.uniform(-1.0, 1.0);
  pv.c_n = {rng.uniform(-1.0, 1.0), rng.uniform(-1.0, 1.0), rng.uniform(-1.0, 1.0)};

  std::vector<Vec3d> xs;
  for (int i = 0; i < 4; i++)
    xs.push_back({rng.uniform(-0.8, 0.8), rng.uniform(-0.8, 0.8), rng.uniform(-0.8, 0.8)});

  HybridGeometryField<double>::Tape tape;
  HybridGeometryField<double>::Grads grads;
  grads.init(field);
  std::vector<GridContrib<double>> contribs(field.grid.contrib_count());
  std::vector<double> grid_grad_l0(field.grid.levels[0].data.size(), 0.0);
  std::vector<double> grid_grad_l1(field.grid.levels[1].data.size(), 0.0);

  for (const auto& x : xs) {
    field.eval_jet(x, tape);
    std::vector<double> fg_bar = pv.c_fg;
    field.backward_jet(tape, pv.c_s, fg_bar.data(), pv.c_n, grads, contribs.data());
    for (const auto& gc : contribs) {
      auto& dst = gc.level == 0 ? grid_grad_l0 : grid_grad_l1;
      for (int c = 0; c < cfg.grid.channels; c++)
        dst[size_t(gc.index) * cfg.grid.channels + c] += gc.g[c];
    }
  }

  auto loss_all = [&]() {
    double l = 0;
    for (const auto& x : xs) l += probe_loss(field, x, pv, tape);
    return l;
  };

  const double h = 1e-4;
  auto check_group = [&](double* data, const double* grad, size_t n, const char* name) {
    double num = 0, den = 0;
    for (size_t i = 0; i < n; i++) {
      double saved = data[i];
      data[i] = saved + h;
      double lp = loss_all();
      data[i] = saved - h;
      double lm = loss_all();
      data[i] = saved;
      double fd = (lp - lm) / (2 * h);
      num += (grad[i] - fd) * (grad[i] - fd);
      den += fd * fd;
    }
    INFO("group ", name);
    CHECK(std::sqrt(num) <= 1e-3 * std::max(std::sqrt(den), 1e-8));
  };

  for (size_t l = 0; l < field.smooth.layers.size(); l++) {
    check_group(field.smooth.layers[l].w.data(), grads.smooth.gw[l].data(),
                field.smooth.layers[l].w.size(), "smooth.w");
    check_group(field.smooth.layers[l].b.data(), grads.smooth.gb[l].data(),
                field.smooth.layers[l].b.size(), "smooth.b");
  }
  for (size_t l = 0; l < field.decoder.layers.size(); l++) {
    check_group(field.decoder.layers[l].w.data(), grads.decoder.gw[l].data(),
                field.decoder.layers[l].w.size(), "decoder.w");
    check_group(field.decoder.layers[l].b.data(), grads.decoder.gb[l].data(),
                field.decoder.layers[l].b.size(), "decoder.b");
  }
  check_group(field.grid.levels[0].data.data(), grid_grad_l0.data(), grid_grad_l0.size(),
              "grid.l0");
  check_group(field.grid.levels[1].data.data(), grid_grad_l1.data(), grid_grad_l1.size(),
              "grid.l1");
}

TEST_CASE("color field: range, purity, parameter gradients") {
  auto cfg = reduced_config();
  ColorField<double> color;
  color.init(cfg, 4);
  DirectionalHead<double>::Tape tape;
  Pcg32 rng(21);
  const int enc_v = color.head.enc_v_dim;
  std::vector<double> ev(enc_v);
  std::vector<double> fg(cfg.feat_dim);

  for (int i = 0; i < 1000; i++) {
    Vec3d x{rng.uniform(-1.0, 1.0), rng.uniform(-1.0, 1.0), rng.uniform(-1.0, 1.0)};
    Vec3d v = normalize(Vec3d{rng.uniform(-1.0, 1.0), rng.uniform(-1.0, 1.0), rng.uniform(-1.0, 1.0)});
    double vv[3] = {v.x, v.y, v.z};
    positional_encoding(vv, 3, cfg.pe_v_freqs, ev.data());
    Vec3d n = normalize(Vec3d{rng.uniform(-1.0, 1.0), rng.uniform(-1.0, 1.0), rng.uniform(-1.0, 1.0)});
    for (auto& f : fg) f = rng.uniform(-1.0, 1.0);
    const double* c = color.head.eval(x, ev.data(), n, fg.data(), tape);
    for (int ch = 0; ch < 3; ch++) {
      CHECK(c[ch] >= 0.0);
      CHECK(c[ch] <= 1.0);
    }
  }

  // purity
  Vec3d x{0.1, 0.2, 0.3}, n{0, 0, 1};
  double vv[3] = {0, 0, -1};
  positional_encoding(vv, 3, cfg.pe_v_freqs, ev.data());
  std::fill(fg.begin(), fg.end(), 0.25);
  const double* c1 = color.head.eval(x, ev.data(), n, fg.data(), tape);
  double c1v[3] = {c1[0], c1[1], c1[2]};
  const double* c2 = color.head.eval(x, ev.data(), n, fg.data(), tape);
  for (int ch = 0; ch < 3; ch++) CHECK(c1v[ch] == c2[ch]);

  // parameter gradients vs finite differences on a dot-probe loss
  MlpGrads<double> grads;
  grads.init(color.head.net.layers);
  Vec3d n_bar{0, 0, 0};
  std::vector<double> fg_bar(cfg.feat_dim, 0.0);
  double ob[3] = {0.3, -0.7, 0.2};
  color.head.eval(x, ev.data(), n, fg.data(), tape);
  color.head.backward(tape, ob, grads, n_bar, fg_bar.data());

  auto loss = [&]() {
    const double* c = color.head.eval(x, ev.data(), n, fg.data(), tape);
    return ob[0] * c[0] + ob[1] * c[1] + ob[2] * c[2];
  };
  const double h = 1e-4;
  for (size_t l = 0; l < color.head.net.layers.size(); l++) {
    auto& lin = color.head.net.layers[l];
    double num = 0, den = 0;
    for (size_t i = 0; i < lin.w.size(); i++) {
      double saved = lin.w[i];
      lin.w[i] = saved + h;
      double lp = loss();
      lin.w[i] = saved - h;
      double lm = loss();
      lin.w[i] = saved;
      double fd = (lp - lm) / (2 * h);
      num += (grads.gw[l][i] - fd) * (grads.gw[l][i] - fd);
      den += fd * fd;
    }
    CHECK(std::sqrt(num) <= 1e-4 * std::max(std::sqrt(den), 1e-8));
  }

  // input adjoints (n_hat) vs finite differences
  for (int k = 0; k < 3; k++) {
    Vec3d np = n, nm = n;
    np[k] += h;
    nm[k] -= h;
    const double* cp = color.head.eval(x, ev.data(), np, fg.data(), tape);
    double lp = ob[0] * cp[0] + ob[1] * cp[1] + ob[2] * cp[2];
    const double* cm = color.head.eval(x, ev.data(), nm, fg.data(), tape);
    double lm = ob[0] * cm[0] + ob[1] * cm[1] + ob[2] * cm[2];
    CHECK(n_bar[k] == doctest::Approx((lp - lm) / (2 * h)).epsilon(1e-4));
  }
}

TEST_CASE("compensation field: zero init and angle cap") {
  auto cfg = reduced_config();
  CompensationField<double> comp;
  comp.init(cfg, 5);
  DirectionalHead<double>::Tape tape;
  Pcg32 rng(31);
  std::vector<double> ev(comp.head.enc_v_dim);
  std::vector<double> fg(cfg.feat_dim);

  // zero-initialized final layer: identically zero angles
  for (int i = 0; i < 50; i++) {
    Vec3d x{rng.uniform(-1.0, 1.0), rng.uniform(-1.0, 1.0), rng.uniform(-1.0, 1.0)};
    double vv[3] = {0, 1, 0};
    positional_encoding(vv, 3, cfg.pe_v_freqs, ev.data());
    Vec3d n{0, 0, 1};
    for (auto& f : fg) f = rng.uniform(-1.0, 1.0);
    const double* a = comp.head.eval(x, ev.data(), n, fg.data(), tape);
    for (int k = 0; k < 3; k++) CHECK(a[k] == 0.0);
  }

  // randomize and verify the tanh cap
  Pcg32 wrng(77);
  comp.head.net.init_random(wrng);
  for (auto& w : comp.head.net.layers.back().w) w *= 50.0;  // push tanh toward saturation
  for (int i = 0; i < 1000; i++) {
    Vec3d x{rng.uniform(-1.0, 1.0), rng.uniform(-1.0, 1.0), rng.uniform(-1.0, 1.0)};
    Vec3d v = normalize(Vec3d{rng.uniform(-1.0, 1.0), rng.uniform(-1.0, 1.0), rng.uniform(-1.0, 1.0)});
    double vv[3] = {v.x, v.y, v.z};
    positional_encoding(vv, 3, cfg.pe_v_freqs, ev.data());
    Vec3d n = normalize(Vec3d{rng.uniform(-1.0, 1.0), rng.uniform(-1.0, 1.0), rng.uniform(-1.0, 1.0)});
    for (auto& f : fg) f = rng.uniform(-1.0, 1.0);
    const double* a = comp.head.eval(x, ev.data(), n, fg.data(), tape);
    for (int k = 0; k < 3; k++) {
      CHECK(std::abs(a[k]) <= cfg.angle_cap);
    }
  }
}
