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

namespace ncrecon::kernels {

template <typename T>
struct OpTable {
  void (*matvec)(const T*, const T*, const T*, T*, int, int);
  void (*matvec_t_acc)(const T*, const T*, T*, int, int);
  void (*outer_acc)(T*, const T*, const T*, int, int);
  void (*axpy)(T*, T, const T*, int);
  T (*dot)(const T*, const T*, int);
  void (*adam_step)(T*, const T*, T*, T*, int, T, T, T, T, T, T);
  void (*vexp)(const T*, T*, int);
  void (*vlog)(const T*, T*, int);
  void (*sigmoid)(const T*, T*, int);
  void (*softplus_sig)(const T*, T, T*, T*, int);
};

extern const OpTable<float> kScalarF32;
extern const OpTable<double> kScalarF64;

#ifdef NCRECON_HAVE_AVX2
extern const OpTable<float> kAvx2F32;
extern const OpTable<double> kAvx2F64;
#endif

}  // namespace ncrecon::kernels
