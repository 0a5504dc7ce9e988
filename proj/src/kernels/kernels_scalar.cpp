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

// Reference kernels. Plain loops, no intrinsics; these define the semantics
// the vectorized variants are tested against.

#include <cmath>

#include "kernels_internal.hpp"

namespace ncrecon::kernels {

namespace {

template <typename T>
void matvec_ref(const T* w, const T* x, const T* b, T* y, int out, int in) {
  for (int i = 0; i < out; i++) {
    const T* row = w + size_t(i) * in;
    T acc = b ? b[i] : T(0);
    for (int j = 0; j < in; j++) acc += row[j] * x[j];
    y[i] = acc;
  }
}

template <typename T>
void matvec_t_acc_ref(const T* w, const T* g, T* y, int out, int in) {
  for (int i = 0; i < out; i++) {
    const T* row = w + size_t(i) * in;
    T gi = g[i];
    for (int j = 0; j < in; j++) y[j] += gi * row[j];
  }
}

template <typename T>
void outer_acc_ref(T* a, const T* g, const T* x, int out, int in) {
  for (int i = 0; i < out; i++) {
    T* row = a + size_t(i) * in;
    T gi = g[i];
    for (int j = 0; j < in; j++) row[j] += gi * x[j];
  }
}

template <typename T>
void axpy_ref(T* y, T s, const T* x, int n) {
  for (int i = 0; i < n; i++) y[i] += s * x[i];
}

template <typename T>
T dot_ref(const T* x, const T* y, int n) {
  T acc = 0;
  for (int i = 0; i < n; i++) acc += x[i] * y[i];
  return acc;
}

template <typename T>
void adam_step_ref(T* p, const T* g, T* m, T* v, int n, T lr, T beta1, T beta2, T eps, T bc1,
                   T bc2) {
  for (int i = 0; i < n; i++) {
    m[i] = beta1 * m[i] + (T(1) - beta1) * g[i];
    v[i] = beta2 * v[i] + (T(1) - beta2) * g[i] * g[i];
    T mhat = m[i] / bc1;
    T vhat = v[i] / bc2;
    p[i] -= lr * mhat / (std::sqrt(vhat) + eps);
  }
}

template <typename T>
void vexp_ref(const T* x, T* y, int n) {
  for (int i = 0; i < n; i++) y[i] = std::exp(x[i]);
}

template <typename T>
void vlog_ref(const T* x, T* y, int n) {
  for (int i = 0; i < n; i++) y[i] = std::log(x[i]);
}

template <typename T>
void sigmoid_ref(const T* x, T* y, int n) {
  for (int i = 0; i < n; i++) y[i] = T(1) / (T(1) + std::exp(-x[i]));
}

// softplus_beta(z) = log1p(exp(beta z)) / beta, computed from the side that
// keeps exp() in (0,1]. Safe when sig aliases z.
template <typename T>
void softplus_sig_ref(const T* z, T beta, T* act, T* sig, int n) {
  for (int i = 0; i < n; i++) {
    T zi = z[i];
    T t = beta * zi;
    T e = std::exp(-std::abs(t));
    T s = t >= T(0) ? T(1) / (T(1) + e) : e / (T(1) + e);
    T lp = std::log1p(e) / beta;
    act[i] = t >= T(0) ? zi + lp : lp;
    sig[i] = s;
  }
}

}  // namespace

const OpTable<float> kScalarF32 = {
    matvec_ref<float>,   matvec_t_acc_ref<float>, outer_acc_ref<float>, axpy_ref<float>,
    dot_ref<float>,      adam_step_ref<float>,    vexp_ref<float>,      vlog_ref<float>,
    sigmoid_ref<float>,  softplus_sig_ref<float>};

const OpTable<double> kScalarF64 = {
    matvec_ref<double>,  matvec_t_acc_ref<double>, outer_acc_ref<double>, axpy_ref<double>,
    dot_ref<double>,     adam_step_ref<double>,    vexp_ref<double>,      vlog_ref<double>,
    sigmoid_ref<double>, softplus_sig_ref<double>};

}  // namespace ncrecon::kernels
