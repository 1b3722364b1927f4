// Copyright 2026 The mqsearch Authors
//
// Licensed under the Apache License, Version 2.0 (the "License");
// you may not use this file except in compliance with the License.
// You may obtain a copy of the License at
//
//      http://www.apache.org/licenses/LICENSE-2.0
//
// Unless required by applicable law or agreed to in writing, software
// distributed under the License is distributed on an "AS IS" BASIS,
// WITHOUT WARRANTIES OR CONDITIONS OF ANY KIND, either express or implied.
// See the License for the specific language governing permissions and
// limitations under the License.

// Scalar reference kernels. These define the semantics the SIMD variants are
// tested against.

#include <cstring>

#include "mqs/kernels.hpp"

namespace mqs::kernels {

namespace {

void matmul_scalar(cxd* c, const cxd* a, const cxd* b, std::size_t dim) {
  std::memset(static_cast<void*>(c), 0, sizeof(cxd) * dim * dim);
  for (std::size_t i = 0; i < dim; ++i) {
    const cxd* arow = a + i * dim;
    cxd* crow = c + i * dim;
    for (std::size_t k = 0; k < dim; ++k) {
      const cxd aik = arow[k];
      if (aik == cxd{}) continue;
      const cxd* brow = b + k * dim;
      for (std::size_t j = 0; j < dim; ++j) crow[j] += aik * brow[j];
    }
  }
}

void axpy_scalar(cxd* y, cxd alpha, const cxd* x, std::size_t len) {
  for (std::size_t i = 0; i < len; ++i) y[i] += alpha * x[i];
}

void scale_scalar(cxd* x, cxd alpha, std::size_t len) {
  for (std::size_t i = 0; i < len; ++i) x[i] *= alpha;
}

void conj_by_diag_scalar(cxd* out, const cxd* a, const cxd* d, std::size_t dim) {
  for (std::size_t r = 0; r < dim; ++r) {
    const cxd dr = d[r];
    const cxd* arow = a + r * dim;
    cxd* orow = out + r * dim;
    for (std::size_t t = 0; t < dim; ++t) orow[t] = dr * (arow[t] * std::conj(d[t]));
  }
}

double norm_sq_scalar(const cxd* x, std::size_t len) {
  double s = 0.0;
  for (std::size_t i = 0; i < len; ++i) s += std::norm(x[i]);
  return s;
}

}  // namespace

const Ops& scalar_ops() {
  static const Ops ops{matmul_scalar, axpy_scalar, scale_scalar,
                       conj_by_diag_scalar, norm_sq_scalar};
  return ops;
}

}  // namespace mqs::kernels
