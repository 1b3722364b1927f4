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

// AVX2 kernels. Complex numbers are interleaved (re, im) pairs, so one 256-bit
// register holds two complex doubles. a*b is formed with the addsub trick:
//   re = ar*br - ai*bi,  im = ar*bi + ai*br
// with ar/ai broadcast and bi/br obtained by an in-lane swap of b.
// This file is compiled with -mavx2 -mfma only; the dispatcher never calls it
// on CPUs without AVX2.

#include "mqs/kernels.hpp"

#if defined(__x86_64__) || defined(_M_X64)

#include <immintrin.h>

#include <cstring>

namespace mqs::kernels {

namespace {

// acc += a * b where a is a (broadcast re, broadcast im) pair.
inline __m256d cmul_acc(__m256d acc, __m256d ar, __m256d ai, __m256d b) {
  const __m256d bswap = _mm256_permute_pd(b, 0b0101);
  return _mm256_add_pd(acc,
                       _mm256_addsub_pd(_mm256_mul_pd(ar, b), _mm256_mul_pd(ai, bswap)));
}

void matmul_avx2(cxd* c, const cxd* a, const cxd* b, std::size_t dim) {
  std::memset(static_cast<void*>(c), 0, sizeof(cxd) * dim * dim);
  const std::size_t vec = dim / 2 * 2;  // complexes handled 2 per register
  for (std::size_t i = 0; i < dim; ++i) {
    const cxd* arow = a + i * dim;
    double* crow = reinterpret_cast<double*>(c + i * dim);
    for (std::size_t k = 0; k < dim; ++k) {
      const cxd aik = arow[k];
      if (aik == cxd{}) continue;
      const __m256d ar = _mm256_set1_pd(aik.real());
      const __m256d ai = _mm256_set1_pd(aik.imag());
      const double* brow = reinterpret_cast<const double*>(b + k * dim);
      std::size_t j = 0;
      for (; j + 4 <= vec; j += 4) {
        __m256d c0 = _mm256_loadu_pd(crow + 2 * j);
        __m256d c1 = _mm256_loadu_pd(crow + 2 * j + 4);
        c0 = cmul_acc(c0, ar, ai, _mm256_loadu_pd(brow + 2 * j));
        c1 = cmul_acc(c1, ar, ai, _mm256_loadu_pd(brow + 2 * j + 4));
        _mm256_storeu_pd(crow + 2 * j, c0);
        _mm256_storeu_pd(crow + 2 * j + 4, c1);
      }
      for (; j < vec; j += 2) {
        __m256d c0 = _mm256_loadu_pd(crow + 2 * j);
        c0 = cmul_acc(c0, ar, ai, _mm256_loadu_pd(brow + 2 * j));
        _mm256_storeu_pd(crow + 2 * j, c0);
      }
      if (j < dim) {
        cxd* ct = c + i * dim + j;
        *ct += aik * b[k * dim + j];
      }
    }
  }
}

void axpy_avx2(cxd* y, cxd alpha, const cxd* x, std::size_t len) {
  const __m256d ar = _mm256_set1_pd(alpha.real());
  const __m256d ai = _mm256_set1_pd(alpha.imag());
  double* yd = reinterpret_cast<double*>(y);
  const double* xd = reinterpret_cast<const double*>(x);
  std::size_t i = 0;
  for (; i + 2 <= len; i += 2) {
    __m256d acc = _mm256_loadu_pd(yd + 2 * i);
    acc = cmul_acc(acc, ar, ai, _mm256_loadu_pd(xd + 2 * i));
    _mm256_storeu_pd(yd + 2 * i, acc);
  }
  for (; i < len; ++i) y[i] += alpha * x[i];
}

void scale_avx2(cxd* x, cxd alpha, std::size_t len) {
  const __m256d ar = _mm256_set1_pd(alpha.real());
  const __m256d ai = _mm256_set1_pd(alpha.imag());
  double* xd = reinterpret_cast<double*>(x);
  std::size_t i = 0;
  for (; i + 2 <= len; i += 2) {
    const __m256d v = _mm256_loadu_pd(xd + 2 * i);
    const __m256d vswap = _mm256_permute_pd(v, 0b0101);
    _mm256_storeu_pd(xd + 2 * i,
                     _mm256_addsub_pd(_mm256_mul_pd(ar, v), _mm256_mul_pd(ai, vswap)));
  }
  for (; i < len; ++i) x[i] *= alpha;
}

void conj_by_diag_avx2(cxd* out, const cxd* a, const cxd* d, std::size_t dim) {
  // out_rt = d_r * (a_rt * conj(d_t)), same association as the scalar kernel.
  for (std::size_t r = 0; r < dim; ++r) {
    const cxd dr = d[r];
    const __m256d rr = _mm256_set1_pd(dr.real());
    const __m256d ri = _mm256_set1_pd(dr.imag());
    const double* arow = reinterpret_cast<const double*>(a + r * dim);
    const double* dd = reinterpret_cast<const double*>(d);
    double* orow = reinterpret_cast<double*>(out + r * dim);
    const __m256d conj_mask = _mm256_set_pd(-0.0, 0.0, -0.0, 0.0);
    std::size_t t = 0;
    for (; t + 2 <= dim; t += 2) {
      const __m256d av = _mm256_loadu_pd(arow + 2 * t);
      const __m256d dv = _mm256_xor_pd(_mm256_loadu_pd(dd + 2 * t), conj_mask);
      // u = a * conj(d_t)
      const __m256d dswap = _mm256_permute_pd(dv, 0b0101);
      const __m256d u = _mm256_addsub_pd(
          _mm256_mul_pd(_mm256_unpacklo_pd(av, av), dv),
          _mm256_mul_pd(_mm256_unpackhi_pd(av, av), dswap));
      // out = d_r * u
      const __m256d uswap = _mm256_permute_pd(u, 0b0101);
      _mm256_storeu_pd(orow + 2 * t, _mm256_addsub_pd(_mm256_mul_pd(rr, u),
                                                      _mm256_mul_pd(ri, uswap)));
    }
    for (; t < dim; ++t) out[r * dim + t] = dr * (a[r * dim + t] * std::conj(d[t]));
  }
}

double norm_sq_avx2(const cxd* x, std::size_t len) {
  const double* xd = reinterpret_cast<const double*>(x);
  __m256d acc = _mm256_setzero_pd();
  std::size_t i = 0;
  for (; i + 2 <= len; i += 2) {
    const __m256d v = _mm256_loadu_pd(xd + 2 * i);
    acc = _mm256_fmadd_pd(v, v, acc);
  }
  alignas(32) double lanes[4];
  _mm256_store_pd(lanes, acc);
  double s = (lanes[0] + lanes[2]) + (lanes[1] + lanes[3]);
  for (; i < len; ++i) s += std::norm(x[i]);
  return s;
}

}  // namespace

const Ops& avx2_ops() {
  static const Ops ops{matmul_avx2, axpy_avx2, scale_avx2, conj_by_diag_avx2,
                       norm_sq_avx2};
  return ops;
}

}  // namespace mqs::kernels

#endif  // x86_64
