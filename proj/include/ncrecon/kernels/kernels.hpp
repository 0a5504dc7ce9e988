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

#pragma once

// Arithmetic inner loops used by the field networks and the optimizer.
// Every operation has a scalar reference implementation and, on x86 with
// AVX2+FMA, a vectorized variant selected at runtime. The two are
// equivalence-tested against each other; numerical results may differ by
// reduction order only.

namespace ncrecon::kernels {

enum class Backend { scalar, avx2 };

bool avx2_supported();
Backend active_backend();

/// Forces a backend (avx2 silently falls back to scalar when unsupported).
void set_backend(Backend b);

// ---- float32 ----

/// y = W x + b  (W row-major out x in; b may be null)
void matvec(const float* w, const float* x, const float* b, float* y, int out, int in);
/// y += W^T g   (g has length out, y length in)
void matvec_t_acc(const float* w, const float* g, float* y, int out, int in);
/// A += g x^T   (A row-major out x in)
void outer_acc(float* a, const float* g, const float* x, int out, int in);
/// y += s * x
void axpy(float* y, float s, const float* x, int n);
float dot(const float* x, const float* y, int n);

/// Fused Adam update. bc1/bc2 are the bias corrections 1-beta^t.
void adam_step(float* p, const float* g, float* m, float* v, int n, float lr, float beta1,
               float beta2, float eps, float bc1, float bc2);

void vexp(const float* x, float* y, int n);
void vlog(const float* x, float* y, int n);
void sigmoid(const float* x, float* y, int n);
/// act = softplus_beta(z), sig = sigmoid(beta z); sig doubles as act'(z).
void softplus_sig(const float* z, float beta, float* act, float* sig, int n);

// ---- float64 ----

void matvec(const double* w, const double* x, const double* b, double* y, int out, int in);
void matvec_t_acc(const double* w, const double* g, double* y, int out, int in);
void outer_acc(double* a, const double* g, const double* x, int out, int in);
void axpy(double* y, double s, const double* x, int n);
double dot(const double* x, const double* y, int n);
void adam_step(double* p, const double* g, double* m, double* v, int n, double lr, double beta1,
               double beta2, double eps, double bc1, double bc2);
void vexp(const double* x, double* y, int n);
void vlog(const double* x, double* y, int n);
void sigmoid(const double* x, double* y, int n);
void softplus_sig(const double* z, double beta, double* act, double* sig, int n);

}  // namespace ncrecon::kernels
