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

#include "ncrecon/kernels/kernels.hpp"

#include <atomic>

#include "kernels_internal.hpp"

namespace ncrecon::kernels {

namespace {

const OpTable<float>* g_f32 = nullptr;
const OpTable<double>* g_f64 = nullptr;
Backend g_backend = Backend::scalar;

bool detect_avx2() {
#if defined(NCRECON_HAVE_AVX2) && (defined(__x86_64__) || defined(__i386__))
  return __builtin_cpu_supports("avx2") && __builtin_cpu_supports("fma");
#else
  return false;
#endif
}

struct Init {
  Init() { set_backend(detect_avx2() ? Backend::avx2 : Backend::scalar); }
} g_init;

}  // namespace

bool avx2_supported() { return detect_avx2(); }

Backend active_backend() { return g_backend; }

void set_backend(Backend b) {
#ifdef NCRECON_HAVE_AVX2
  if (b == Backend::avx2 && detect_avx2()) {
    g_f32 = &kAvx2F32;
    g_f64 = &kAvx2F64;
    g_backend = Backend::avx2;
    return;
  }
#endif
  g_f32 = &kScalarF32;
  g_f64 = &kScalarF64;
  g_backend = Backend::scalar;
}

// float32 forwarding

void matvec(const float* w, const float* x, const float* b, float* y, int out, int in) {
  g_f32->matvec(w, x, b, y, out, in);
}
void matvec_t_acc(const float* w, const float* g, float* y, int out, int in) {
  g_f32->matvec_t_acc(w, g, y, out, in);
}
void outer_acc(float* a, const float* g, const float* x, int out, int in) {
  g_f32->outer_acc(a, g, x, out, in);
}
void axpy(float* y, float s, const float* x, int n) { g_f32->axpy(y, s, x, n); }
float dot(const float* x, const float* y, int n) { return g_f32->dot(x, y, n); }
void adam_step(float* p, const float* g, float* m, float* v, int n, float lr, float beta1,
               float beta2, float eps, float bc1, float bc2) {
  g_f32->adam_step(p, g, m, v, n, lr, beta1, beta2, eps, bc1, bc2);
}
void vexp(const float* x, float* y, int n) { g_f32->vexp(x, y, n); }
void vlog(const float* x, float* y, int n) { g_f32->vlog(x, y, n); }
void sigmoid(const float* x, float* y, int n) { g_f32->sigmoid(x, y, n); }
void softplus_sig(const float* z, float beta, float* act, float* sig, int n) {
  g_f32->softplus_sig(z, beta, act, sig, n);
}

// float64 forwarding

void matvec(const double* w, const double* x, const double* b, double* y, int out, int in) {
  g_f64->matvec(w, x, b, y, out, in);
}
void matvec_t_acc(const double* w, const double* g, double* y, int out, int in) {
  g_f64->matvec_t_acc(w, g, y, out, in);
}
void outer_acc(double* a, const double* g, const double* x, int out, int in) {
  g_f64->outer_acc(a, g, x, out, in);
}
void axpy(double* y, double s, const double* x, int n) { g_f64->axpy(y, s, x, n); }
double dot(const double* x, const double* y, int n) { return g_f64->dot(x, y, n); }
void adam_step(double* p, const double* g, double* m, double* v, int n, double lr, double beta1,
               double beta2, double eps, double bc1, double bc2) {
  g_f64->adam_step(p, g, m, v, n, lr, beta1, beta2, eps, bc1, bc2);
}
void vexp(const double* x, double* y, int n) { g_f64->vexp(x, y, n); }
void vlog(const double* x, double* y, int n) { g_f64->vlog(x, y, n); }
void sigmoid(const double* x, double* y, int n) { g_f64->sigmoid(x, y, n); }
void softplus_sig(const double* z, double beta, double* act, double* sig, int n) {
  g_f64->softplus_sig(z, beta, act, sig, n);
}

}  // namespace ncrecon::kernels
