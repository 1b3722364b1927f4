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

#include "mqs/linalg.hpp"

#include <algorithm>
#include <cmath>
#include <numeric>
#include <stdexcept>

namespace mqs {

namespace {

// One complex Jacobi rotation zeroing a(p,q). With a_pq = g e^{i phi} the
// rotation J has J_pp = J_qq = c, J_qp = s = sigma e^{-i phi},
// J_pq = -conj(s); tan(theta) = sigma/c solves g t^2 - (a_qq - a_pp) t - g = 0
// (smaller-magnitude root for stability).
void rotate(std::vector<cxd>& a, std::vector<cxd>& v, std::size_t n,
            std::size_t p, std::size_t q) {
  const cxd apq = a[p * n + q];
  const double g = std::abs(apq);
  if (g == 0.0) return;
  const double app = a[p * n + p].real();
  const double aqq = a[q * n + q].real();
  const double tau = (aqq - app) / (2.0 * g);
  const double t = (tau >= 0.0) ? -1.0 / (tau + std::sqrt(tau * tau + 1.0))
                                : 1.0 / (-tau + std::sqrt(tau * tau + 1.0));
  const double c = 1.0 / std::sqrt(1.0 + t * t);
  const double sigma = t * c;
  const cxd phase = apq / g;  // e^{i phi}
  const cxd s = sigma * std::conj(phase);

  for (std::size_t i = 0; i < n; ++i) {
    if (i == p || i == q) continue;
    const cxd aip = a[i * n + p];
    const cxd aiq = a[i * n + q];
    a[i * n + p] = c * aip + s * aiq;
    a[i * n + q] = -std::conj(s) * aip + c * aiq;
    a[p * n + i] = std::conj(a[i * n + p]);
    a[q * n + i] = std::conj(a[i * n + q]);
  }
  a[p * n + p] = c * c * app + sigma * sigma * aqq + 2.0 * c * sigma * g;
  a[q * n + q] = sigma * sigma * app + c * c * aqq - 2.0 * c * sigma * g;
  a[p * n + q] = 0.0;
  a[q * n + p] = 0.0;

  for (std::size_t i = 0; i < n; ++i) {
    const cxd vip = v[i * n + p];
    const cxd viq = v[i * n + q];
    v[i * n + p] = c * vip + s * viq;
    v[i * n + q] = -std::conj(s) * vip + c * viq;
  }
}

double offdiag_norm(const std::vector<cxd>& a, std::size_t n) {
  double s = 0.0;
  for (std::size_t p = 0; p < n; ++p)
    for (std::size_t q = p + 1; q < n; ++q) s += std::norm(a[p * n + q]);
  return std::sqrt(2.0 * s);
}

}  // namespace

EigH eig_hermitian(const Operator& input) {
  const std::size_t n = input.dim();
  if (n == 0) throw std::invalid_argument("eig_hermitian: empty operator");

  // Work on the exactly hermitian part; the diagonal is taken real.
  std::vector<cxd> a(n * n);
  for (std::size_t p = 0; p < n; ++p) {
    a[p * n + p] = input.at(p, p).real();
    for (std::size_t q = p + 1; q < n; ++q) {
      const cxd m = 0.5 * (input.at(p, q) + std::conj(input.at(q, p)));
      a[p * n + q] = m;
      a[q * n + p] = std::conj(m);
    }
  }
  std::vector<cxd> v(n * n);
  for (std::size_t i = 0; i < n; ++i) v[i * n + i] = 1.0;

  double scale = 0.0;
  for (const cxd& x : a) scale = std::max(scale, std::abs(x));
  if (scale == 0.0) scale = 1.0;
  const double stop = 1e-15 * scale * static_cast<double>(n);

  for (int sweep = 0; sweep < 100; ++sweep) {
    if (offdiag_norm(a, n) <= stop) break;
    for (std::size_t p = 0; p < n; ++p)
      for (std::size_t q = p + 1; q < n; ++q)
        if (std::abs(a[p * n + q]) > 1e-300) rotate(a, v, n, p, q);
  }

  EigH out;
  out.values.resize(n);
  std::vector<std::size_t> order(n);
  std::iota(order.begin(), order.end(), std::size_t{0});
  std::vector<double> diag(n);
  for (std::size_t i = 0; i < n; ++i) diag[i] = a[i * n + i].real();
  std::stable_sort(order.begin(), order.end(),
                   [&](std::size_t x, std::size_t y) { return diag[x] < diag[y]; });

  out.vectors = Operator(n);
  for (std::size_t k = 0; k < n; ++k) {
    out.values[k] = diag[order[k]];
    for (std::size_t i = 0; i < n; ++i) out.vectors.at(i, k) = v[i * n + order[k]];
  }
  out.vectors.unitary_flag = Operator::Flag::asserted;
  return out;
}

}  // namespace mqs
