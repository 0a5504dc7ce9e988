#include <doctest.h>

#include <cmath>
#include <vector>

#include "ncrecon/core/rng.hpp"
#include "ncrecon/kernels/kernels.hpp"

using namespace ncrecon;
namespace k = ncrecon::kernels;

namespace {

template <typename T>
std::vector<T> random_vec(Pcg32& rng, int n, T lo = T(-2), T hi = T(2)) {
  std::vector<T> v(n);
  for (auto& x : v) x = T(rng.uniform(double(lo), double(hi)));
  return v;
}

struct BackendGuard {
  k::Backend saved = k::active_backend();
  ~BackendGuard() { k::set_backend(saved); }
};

}  // namespace

TEST_CASE("scalar and simd kernels agree") {
  if (!k::avx2_supported()) {
    MESSAGE("avx2 not available; dispatch stays scalar");
    return;
  }
  BackendGuard guard;
  Pcg32 rng(11);

  // odd sizes on purpose so tails take the scalar path
  for (int in : {1, 3, 8, 17, 32, 67, 96}) {
    for (int out : {1, 5, 16, 33, 64}) {
      auto w = random_vec<float>(rng, out * in);
      auto x = random_vec<float>(rng, in);
      auto b = random_vec<float>(rng, out);
      auto g = random_vec<float>(rng, out);

      std::vector<float> y_s(out), y_v(out);
      k::set_backend(k::Backend::scalar);
      k::matvec(w.data(), x.data(), b.data(), y_s.data(), out, in);
      k::set_backend(k::Backend::avx2);
      k::matvec(w.data(), x.data(), b.data(), y_v.data(), out, in);
      for (int i = 0; i < out; i++) CHECK(y_v[i] == doctest::Approx(y_s[i]).epsilon(1e-5));

      std::vector<float> t_s(in, 0.5f), t_v(in, 0.5f);
      k::set_backend(k::Backend::scalar);
      k::matvec_t_acc(w.data(), g.data(), t_s.data(), out, in);
      k::set_backend(k::Backend::avx2);
      k::matvec_t_acc(w.data(), g.data(), t_v.data(), out, in);
      for (int i = 0; i < in; i++) CHECK(t_v[i] == doctest::Approx(t_s[i]).epsilon(1e-5));

      std::vector<float> a_s(out * in, 0.1f), a_v(out * in, 0.1f);
      k::set_backend(k::Backend::scalar);
      k::outer_acc(a_s.data(), g.data(), x.data(), out, in);
      k::set_backend(k::Backend::avx2);
      k::outer_acc(a_v.data(), g.data(), x.data(), out, in);
      for (size_t i = 0; i < a_s.size(); i++) CHECK(a_v[i] == doctest::Approx(a_s[i]).epsilon(1e-5));
    }
  }
}

TEST_CASE("simd transcendentals track libm") {
  if (!k::avx2_supported()) return;
  BackendGuard guard;
  Pcg32 rng(23);
  const int n = 4097;
  auto x = random_vec<float>(rng, n, -20.0f, 20.0f);
  std::vector<float> y(n);

  k::set_backend(k::Backend::avx2);
  k::vexp(x.data(), y.data(), n);
  for (int i = 0; i < n; i++) {
    float ref = std::exp(x[i]);
    CHECK(std::abs(y[i] - ref) <= 2e-6f * std::max(ref, 1e-20f));
  }

  auto xp = random_vec<float>(rng, n, 1e-6f, 50.0f);
  k::vlog(xp.data(), y.data(), n);
  for (int i = 0; i < n; i++) CHECK(y[i] == doctest::Approx(std::log(xp[i])).epsilon(2e-6));

  k::sigmoid(x.data(), y.data(), n);
  for (int i = 0; i < n; i++)
    CHECK(std::abs(y[i] - 1.0f / (1.0f + std::exp(-x[i]))) < 2e-6f);

  std::vector<float> act(n), sig(n);
  const float beta = 100.0f;
  k::softplus_sig(x.data(), beta, act.data(), sig.data(), n);
  for (int i = 0; i < n; i++) {
    double t = double(beta) * x[i];
    double ref_act = t > 30 ? x[i] : std::log1p(std::exp(t)) / beta;
    double ref_sig = 1.0 / (1.0 + std::exp(-t));
    CHECK(std::abs(act[i] - ref_act) < 5e-6);
    CHECK(std::abs(sig[i] - ref_sig) < 2e-6);
  }
}

TEST_CASE("adam step matches reference update") {
  if (!k::avx2_supported()) return;
  BackendGuard guard;
  Pcg32 rng(5);
  const int n = 131;
  auto g = random_vec<float>(rng, n);
  auto p0 = random_vec<float>(rng, n);
  auto m0 = random_vec<float>(rng, n, 0.0f, 0.1f);
  auto v0 = random_vec<float>(rng, n, 0.0f, 0.1f);

  auto p_s = p0, m_s = m0, v_s = v0;
  auto p_v = p0, m_v = m0, v_v = v0;
  k::set_backend(k::Backend::scalar);
  k::adam_step(p_s.data(), g.data(), m_s.data(), v_s.data(), n, 1e-3f, 0.9f, 0.999f, 1e-8f, 0.1f, 0.001f);
  k::set_backend(k::Backend::avx2);
  k::adam_step(p_v.data(), g.data(), m_v.data(), v_v.data(), n, 1e-3f, 0.9f, 0.999f, 1e-8f, 0.1f, 0.001f);
  for (int i = 0; i < n; i++) {
    CHECK(p_v[i] == doctest::Approx(p_s[i]).epsilon(1e-6));
    CHECK(m_v[i] == doctest::Approx(m_s[i]).epsilon(1e-6));
    CHECK(v_v[i] == doctest::Approx(v_s[i]).epsilon(1e-6));
  }
}

TEST_CASE("double kernels agree across backends") {
  if (!k::avx2_supported()) return;
  BackendGuard guard;
  Pcg32 rng(17);
  const int out = 23, in = 41;
  auto w = random_vec<double>(rng, out * in);
  auto x = random_vec<double>(rng, in);
  std::vector<double> y_s(out), y_v(out);
  k::set_backend(k::Backend::scalar);
  k::matvec(w.data(), x.data(), nullptr, y_s.data(), out, in);
  double d_s = k::dot(w.data(), w.data(), out * in);
  k::set_backend(k::Backend::avx2);
  k::matvec(w.data(), x.data(), nullptr, y_v.data(), out, in);
  double d_v = k::dot(w.data(), w.data(), out * in);
  for (int i = 0; i < out; i++) CHECK(y_v[i] == doctest::Approx(y_s[i]).epsilon(1e-13));
  CHECK(d_v == doctest::Approx(d_s).epsilon(1e-13));
}
