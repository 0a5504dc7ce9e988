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

// AVX2+FMA kernel variants. This translation unit is compiled with
// -mavx2 -mfma and must only be entered through the runtime dispatch.
// exp/log follow the Cephes polynomial scheme (float path); the double
// transcendentals stay scalar, AVX2 buys little there.

#ifdef NCRECON_HAVE_AVX2

#include <immintrin.h>

#include <cmath>

#include "kernels_internal.hpp"

namespace ncrecon::kernels {

namespace {

inline float hsum8(__m256 v) {
  __m128 lo = _mm256_castps256_ps128(v);
  __m128 hi = _mm256_extractf128_ps(v, 1);
  lo = _mm_add_ps(lo, hi);
  lo = _mm_hadd_ps(lo, lo);
  lo = _mm_hadd_ps(lo, lo);
  return _mm_cvtss_f32(lo);
}

inline double hsum4(__m256d v) {
  __m128d lo = _mm256_castpd256_pd128(v);
  __m128d hi = _mm256_extractf128_pd(v, 1);
  lo = _mm_add_pd(lo, hi);
  return _mm_cvtsd_f64(lo) + _mm_cvtsd_f64(_mm_unpackhi_pd(lo, lo));
}

// ---- float32 ----

void matvec_f32(const float* w, const float* x, const float* b, float* y, int out, int in) {
  for (int i = 0; i < out; i++) {
    const float* row = w + size_t(i) * in;
    __m256 acc0 = _mm256_setzero_ps();
    __m256 acc1 = _mm256_setzero_ps();
    int j = 0;
    for (; j + 16 <= in; j += 16) {
      acc0 = _mm256_fmadd_ps(_mm256_loadu_ps(row + j), _mm256_loadu_ps(x + j), acc0);
      acc1 = _mm256_fmadd_ps(_mm256_loadu_ps(row + j + 8), _mm256_loadu_ps(x + j + 8), acc1);
    }
    for (; j + 8 <= in; j += 8)
      acc0 = _mm256_fmadd_ps(_mm256_loadu_ps(row + j), _mm256_loadu_ps(x + j), acc0);
    float acc = hsum8(_mm256_add_ps(acc0, acc1));
    for (; j < in; j++) acc += row[j] * x[j];
    y[i] = b ? acc + b[i] : acc;
  }
}

void matvec_t_acc_f32(const float* w, const float* g, float* y, int out, int in) {
  for (int i = 0; i < out; i++) {
    const float* row = w + size_t(i) * in;
    __m256 gi = _mm256_set1_ps(g[i]);
    int j = 0;
    for (; j + 8 <= in; j += 8)
      _mm256_storeu_ps(y + j, _mm256_fmadd_ps(gi, _mm256_loadu_ps(row + j), _mm256_loadu_ps(y + j)));
    for (; j < in; j++) y[j] += g[i] * row[j];
  }
}

void outer_acc_f32(float* a, const float* g, const float* x, int out, int in) {
  for (int i = 0; i < out; i++) {
    float* row = a + size_t(i) * in;
    __m256 gi = _mm256_set1_ps(g[i]);
    int j = 0;
    for (; j + 8 <= in; j += 8)
      _mm256_storeu_ps(row + j, _mm256_fmadd_ps(gi, _mm256_loadu_ps(x + j), _mm256_loadu_ps(row + j)));
    for (; j < in; j++) row[j] += g[i] * x[j];
  }
}

void axpy_f32(float* y, float s, const float* x, int n) {
  __m256 vs = _mm256_set1_ps(s);
  int i = 0;
  for (; i + 8 <= n; i += 8)
    _mm256_storeu_ps(y + i, _mm256_fmadd_ps(vs, _mm256_loadu_ps(x + i), _mm256_loadu_ps(y + i)));
  for (; i < n; i++) y[i] += s * x[i];
}

float dot_f32(const float* x, const float* y, int n) {
  __m256 acc = _mm256_setzero_ps();
  int i = 0;
  for (; i + 8 <= n; i += 8)
    acc = _mm256_fmadd_ps(_mm256_loadu_ps(x + i), _mm256_loadu_ps(y + i), acc);
  float s = hsum8(acc);
  for (; i < n; i++) s += x[i] * y[i];
  return s;
}

void adam_step_f32(float* p, const float* g, float* m, float* v, int n, float lr, float beta1,
                   float beta2, float eps, float bc1, float bc2) {
  __m256 vb1 = _mm256_set1_ps(beta1), vb1c = _mm256_set1_ps(1.0f - beta1);
  __m256 vb2 = _mm256_set1_ps(beta2), vb2c = _mm256_set1_ps(1.0f - beta2);
  __m256 vlr = _mm256_set1_ps(lr), veps = _mm256_set1_ps(eps);
  __m256 vibc1 = _mm256_set1_ps(1.0f / bc1), vibc2 = _mm256_set1_ps(1.0f / bc2);
  int i = 0;
  for (; i + 8 <= n; i += 8) {
    __m256 gi = _mm256_loadu_ps(g + i);
    __m256 mi = _mm256_fmadd_ps(vb1c, gi, _mm256_mul_ps(vb1, _mm256_loadu_ps(m + i)));
    __m256 vi = _mm256_fmadd_ps(vb2c, _mm256_mul_ps(gi, gi), _mm256_mul_ps(vb2, _mm256_loadu_ps(v + i)));
    _mm256_storeu_ps(m + i, mi);
    _mm256_storeu_ps(v + i, vi);
    __m256 mhat = _mm256_mul_ps(mi, vibc1);
    __m256 vhat = _mm256_mul_ps(vi, vibc2);
    __m256 denom = _mm256_add_ps(_mm256_sqrt_ps(vhat), veps);
    __m256 upd = _mm256_div_ps(_mm256_mul_ps(vlr, mhat), denom);
    _mm256_storeu_ps(p + i, _mm256_sub_ps(_mm256_loadu_ps(p + i), upd));
  }
  for (; i < n; i++) {
    m[i] = beta1 * m[i] + (1.0f - beta1) * g[i];
    v[i] = beta2 * v[i] + (1.0f - beta2) * g[i] * g[i];
    p[i] -= lr * (m[i] / bc1) / (std::sqrt(v[i] / bc2) + eps);
  }
}

// Cephes-style exp, valid to ~1 ulp over the clamped range.
inline __m256 exp256(__m256 x) {
  const __m256 hi = _mm256_set1_ps(88.3762626647950f);
  const __m256 lo = _mm256_set1_ps(-88.3762626647949f);
  const __m256 log2e = _mm256_set1_ps(1.44269504088896341f);
  const __m256 c1 = _mm256_set1_ps(0.693359375f);
  const __m256 c2 = _mm256_set1_ps(-2.12194440e-4f);
  x = _mm256_min_ps(_mm256_max_ps(x, lo), hi);
  __m256 fx = _mm256_floor_ps(_mm256_fmadd_ps(x, log2e, _mm256_set1_ps(0.5f)));
  x = _mm256_fnmadd_ps(fx, c1, x);
  x = _mm256_fnmadd_ps(fx, c2, x);
  __m256 z = _mm256_mul_ps(x, x);
  __m256 y = _mm256_set1_ps(1.9875691500e-4f);
  y = _mm256_fmadd_ps(y, x, _mm256_set1_ps(1.3981999507e-3f));
  y = _mm256_fmadd_ps(y, x, _mm256_set1_ps(8.3334519073e-3f));
  y = _mm256_fmadd_ps(y, x, _mm256_set1_ps(4.1665795894e-2f));
  y = _mm256_fmadd_ps(y, x, _mm256_set1_ps(1.6666665459e-1f));
  y = _mm256_fmadd_ps(y, x, _mm256_set1_ps(5.0000001201e-1f));
  y = _mm256_fmadd_ps(y, z, x);
  y = _mm256_add_ps(y, _mm256_set1_ps(1.0f));
  __m256i n = _mm256_cvttps_epi32(fx);
  n = _mm256_add_epi32(n, _mm256_set1_epi32(0x7f));
  n = _mm256_slli_epi32(n, 23);
  return _mm256_mul_ps(y, _mm256_castsi256_ps(n));
}

// Cephes-style natural log for x > 0.
inline __m256 log256(__m256 x) {
  const __m256i min_norm = _mm256_set1_epi32(0x00800000);
  const __m256 one = _mm256_set1_ps(1.0f);
  x = _mm256_max_ps(x, _mm256_castsi256_ps(min_norm));
  __m256i ux = _mm256_castps_si256(x);
  __m256i emm0 = _mm256_srli_epi32(ux, 23);
  ux = _mm256_and_si256(ux, _mm256_set1_epi32(~0x7f800000));
  ux = _mm256_or_si256(ux, _mm256_castps_si256(_mm256_set1_ps(0.5f)));
  x = _mm256_castsi256_ps(ux);
  emm0 = _mm256_sub_epi32(emm0, _mm256_set1_epi32(0x7f));
  __m256 e = _mm256_add_ps(_mm256_cvtepi32_ps(emm0), one);
  __m256 mask = _mm256_cmp_ps(x, _mm256_set1_ps(0.707106781186547524f), _CMP_LT_OQ);
  __m256 tmp = _mm256_and_ps(x, mask);
  x = _mm256_sub_ps(x, one);
  e = _mm256_sub_ps(e, _mm256_and_ps(one, mask));
  x = _mm256_add_ps(x, tmp);
  __m256 z = _mm256_mul_ps(x, x);
  __m256 y = _mm256_set1_ps(7.0376836292e-2f);
  y = _mm256_fmadd_ps(y, x, _mm256_set1_ps(-1.1514610310e-1f));
  y = _mm256_fmadd_ps(y, x, _mm256_set1_ps(1.1676998740e-1f));
  y = _mm256_fmadd_ps(y, x, _mm256_set1_ps(-1.2420140846e-1f));
  y = _mm256_fmadd_ps(y, x, _mm256_set1_ps(1.4249322787e-1f));
  y = _mm256_fmadd_ps(y, x, _mm256_set1_ps(-1.6668057665e-1f));
  y = _mm256_fmadd_ps(y, x, _mm256_set1_ps(2.0000714765e-1f));
  y = _mm256_fmadd_ps(y, x, _mm256_set1_ps(-2.4999993993e-1f));
  y = _mm256_fmadd_ps(y, x, _mm256_set1_ps(3.3333331174e-1f));
  y = _mm256_mul_ps(y, _mm256_mul_ps(x, z));
  y = _mm256_fmadd_ps(e, _mm256_set1_ps(-2.12194440e-4f), y);
  y = _mm256_fnmadd_ps(_mm256_set1_ps(0.5f), z, y);
  x = _mm256_add_ps(x, y);
  x = _mm256_fmadd_ps(e, _mm256_set1_ps(0.693359375f), x);
  return x;
}

void vexp_f32(const float* x, float* y, int n) {
  int i = 0;
  for (; i + 8 <= n; i += 8) _mm256_storeu_ps(y + i, exp256(_mm256_loadu_ps(x + i)));
  for (; i < n; i++) y[i] = std::exp(x[i]);
}

void vlog_f32(const float* x, float* y, int n) {
  int i = 0;
  for (; i + 8 <= n; i += 8) _mm256_storeu_ps(y + i, log256(_mm256_loadu_ps(x + i)));
  for (; i < n; i++) y[i] = std::log(x[i]);
}

void sigmoid_f32(const float* x, float* y, int n) {
  const __m256 one = _mm256_set1_ps(1.0f);
  int i = 0;
  for (; i + 8 <= n; i += 8) {
    __m256 e = exp256(_mm256_sub_ps(_mm256_setzero_ps(), _mm256_loadu_ps(x + i)));
    _mm256_storeu_ps(y + i, _mm256_div_ps(one, _mm256_add_ps(one, e)));
  }
  for (; i < n; i++) y[i] = 1.0f / (1.0f + std::exp(-x[i]));
}

void softplus_sig_f32(const float* z, float beta, float* act, float* sig, int n) {
  const __m256 one = _mm256_set1_ps(1.0f);
  const __m256 vbeta = _mm256_set1_ps(beta);
  const __m256 inv_beta = _mm256_set1_ps(1.0f / beta);
  const __m256 sign_mask = _mm256_set1_ps(-0.0f);
  int i = 0;
  for (; i + 8 <= n; i += 8) {
    __m256 zi = _mm256_loadu_ps(z + i);
    __m256 t = _mm256_mul_ps(vbeta, zi);
    __m256 at = _mm256_andnot_ps(sign_mask, t);
    __m256 e = exp256(_mm256_sub_ps(_mm256_setzero_ps(), at));  // exp(-|t|) in (0,1]
    __m256 denom = _mm256_add_ps(one, e);
    __m256 pos = _mm256_cmp_ps(t, _mm256_setzero_ps(), _CMP_GE_OQ);
    __m256 s = _mm256_div_ps(_mm256_blendv_ps(e, one, pos), denom);
    _mm256_storeu_ps(sig + i, s);
    __m256 lp = _mm256_mul_ps(log256(denom), inv_beta);  // log1p(e)/beta
    __m256 a = _mm256_add_ps(_mm256_and_ps(pos, zi), lp);
    _mm256_storeu_ps(act + i, a);
  }
  for (; i < n; i++) {
    float zi = z[i];
    float t = beta * zi;
    float e = std::exp(-std::abs(t));
    float s = t >= 0 ? 1.0f / (1.0f + e) : e / (1.0f + e);
    float lp = std::log1p(e) / beta;
    act[i] = t >= 0 ? zi + lp : lp;
    sig[i] = s;
  }
}

// ---- float64 ----

void matvec_f64(const double* w, const double* x, const double* b, double* y, int out, int in) {
  for (int i = 0; i < out; i++) {
    const double* row = w + size_t(i) * in;
    __m256d acc = _mm256_setzero_pd();
    int j = 0;
    for (; j + 4 <= in; j += 4)
      acc = _mm256_fmadd_pd(_mm256_loadu_pd(row + j), _mm256_loadu_pd(x + j), acc);
    double s = hsum4(acc);
    for (; j < in; j++) s += row[j] * x[j];
    y[i] = b ? s + b[i] : s;
  }
}

void matvec_t_acc_f64(const double* w, const double* g, double* y, int out, int in) {
  for (int i = 0; i < out; i++) {
    const double* row = w + size_t(i) * in;
    __m256d gi = _mm256_set1_pd(g[i]);
    int j = 0;
    for (; j + 4 <= in; j += 4)
      _mm256_storeu_pd(y + j, _mm256_fmadd_pd(gi, _mm256_loadu_pd(row + j), _mm256_loadu_pd(y + j)));
    for (; j < in; j++) y[j] += g[i] * row[j];
  }
}

void outer_acc_f64(double* a, const double* g, const double* x, int out, int in) {
  for (int i = 0; i < out; i++) {
    double* row = a + size_t(i) * in;
    __m256d gi = _mm256_set1_pd(g[i]);
    int j = 0;
    for (; j + 4 <= in; j += 4)
      _mm256_storeu_pd(row + j, _mm256_fmadd_pd(gi, _mm256_loadu_pd(x + j), _mm256_loadu_pd(row + j)));
    for (; j < in; j++) row[j] += g[i] * x[j];
  }
}

void axpy_f64(double* y, double s, const double* x, int n) {
  __m256d vs = _mm256_set1_pd(s);
  int i = 0;
  for (; i + 4 <= n; i += 4)
    _mm256_storeu_pd(y + i, _mm256_fmadd_pd(vs, _mm256_loadu_pd(x + i), _mm256_loadu_pd(y + i)));
  for (; i < n; i++) y[i] += s * x[i];
}

double dot_f64(const double* x, const double* y, int n) {
  __m256d acc = _mm256_setzero_pd();
  int i = 0;
  for (; i + 4 <= n; i += 4)
    acc = _mm256_fmadd_pd(_mm256_loadu_pd(x + i), _mm256_loadu_pd(y + i), acc);
  double s = hsum4(acc);
  for (; i < n; i++) s += x[i] * y[i];
  return s;
}

void adam_step_f64(double* p, const double* g, double* m, double* v, int n, double lr, double beta1,
                   double beta2, double eps, double bc1, double bc2) {
  for (int i = 0; i < n; i++) {
    m[i] = beta1 * m[i] + (1.0 - beta1) * g[i];
    v[i] = beta2 * v[i] + (1.0 - beta2) * g[i] * g[i];
    p[i] -= lr * (m[i] / bc1) / (std::sqrt(v[i] / bc2) + eps);
  }
}

void vexp_f64(const double* x, double* y, int n) {
  for (int i = 0; i < n; i++) y[i] = std::exp(x[i]);
}
void vlog_f64(const double* x, double* y, int n) {
  for (int i = 0; i < n; i++) y[i] = std::log(x[i]);
}
void sigmoid_f64(const double* x, double* y, int n) {
  for (int i = 0; i < n; i++) y[i] = 1.0 / (1.0 + std::exp(-x[i]));
}
void softplus_sig_f64(const double* z, double beta, double* act, double* sig, int n) {
  for (int i = 0; i < n; i++) {
    double zi = z[i];
    double t = beta * zi;
    double e = std::exp(-std::abs(t));
    double s = t >= 0 ? 1.0 / (1.0 + e) : e / (1.0 + e);
    double lp = std::log1p(e) / beta;
    act[i] = t >= 0 ? zi + lp : lp;
    sig[i] = s;
  }
}

}  // namespace

const OpTable<float> kAvx2F32 = {matvec_f32,  matvec_t_acc_f32, outer_acc_f32, axpy_f32,
                                 dot_f32,     adam_step_f32,    vexp_f32,      vlog_f32,
                                 sigmoid_f32, softplus_sig_f32};

const OpTable<double> kAvx2F64 = {matvec_f64,  matvec_t_acc_f64, outer_acc_f64, axpy_f64,
                                  dot_f64,     adam_step_f64,    vexp_f64,      vlog_f64,
                                  sigmoid_f64, softplus_sig_f64};

}  // namespace ncrecon::kernels

#endif  // NCRECON_HAVE_AVX2
