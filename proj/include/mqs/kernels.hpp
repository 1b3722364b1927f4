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

#pragma once

#include <cstddef>
#include <string>

#include "mqs/types.hpp"

namespace mqs::kernels {

// Data-parallel inner loops of the dense complex algebra. Every routine has a
// scalar reference implementation and may have SIMD variants; the active set
// is selected once at startup from CPUID (override with MQS_KERNEL=scalar|avx2).
// Variants are equivalence-tested against the scalar reference.
struct Ops {
  // C = A * B, row-major square matrices of size dim x dim. C must not alias.
  void (*matmul)(cxd* c, const cxd* a, const cxd* b, std::size_t dim);
  // y += alpha * x
  void (*axpy)(cxd* y, cxd alpha, const cxd* x, std::size_t len);
  // x *= alpha
  void (*scale)(cxd* x, cxd alpha, std::size_t len);
  // out[r*dim+t] = d[r] * a[r*dim+t] * conj(d[t])  (conjugation by a diagonal
  // unitary with entries d). out may alias a.
  void (*conj_by_diag)(cxd* out, const cxd* a, const cxd* d, std::size_t dim);
  // sum of |x_i|^2
  double (*norm_sq)(const cxd* x, std::size_t len);
};

enum class Variant { scalar, avx2 };

std::string variant_name(Variant v);

bool cpu_supports_avx2();

/// Kernel set for an explicit variant (throws if unavailable on this CPU).
const Ops& ops(Variant v);

/// The runtime-selected kernel set.
const Ops& active();
Variant active_variant();

}  // namespace mqs::kernels
