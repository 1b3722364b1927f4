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

#include "mqs/spinalg.hpp"

#include <bit>
#include <cmath>
#include <stdexcept>

#include "mqs/kernels.hpp"
#include "mqs/linalg.hpp"

namespace mqs::spinalg {

namespace {
constexpr cxd kI{0.0, 1.0};
}

Operator pauli2(Axis p) {
  Operator m(2);
  switch (p) {
    case Axis::x:
      m.at(0, 1) = 1.0;
      m.at(1, 0) = 1.0;
      break;
    case Axis::y:
      m.at(0, 1) = -kI;
      m.at(1, 0) = kI;
      break;
    case Axis::z:
      m.at(0, 0) = 1.0;
      m.at(1, 1) = -1.0;
      m.diagonal_flag = Operator::Flag::asserted;
      break;
  }
  m.hermitian_flag = Operator::Flag::asserted;
  m.unitary_flag = Operator::Flag::asserted;
  return m;
}

Operator spin2(Axis p) {
  Operator m = pauli2(p);
  m *= 0.5;
  m.hermitian_flag = Operator::Flag::asserted;
  return m;
}

Operator rot2(Axis p, double theta) {
  const double c = std::cos(theta / 2.0);
  const double s = std::sin(theta / 2.0);
  Operator m = Operator::identity(2);
  m *= cxd{c, 0.0};
  Operator sig = pauli2(p);
  sig *= -kI * s;
  m += sig;
  m.unitary_flag = Operator::Flag::asserted;
  if (p == Axis::z) m.diagonal_flag = Operator::Flag::asserted;
  return m;
}

Operator kron_chain(const std::vector<Operator>& factors) {
  if (factors.empty()) throw std::invalid_argument("kron_chain: no factors");
  Operator out = factors.front();
  for (std::size_t i = 1; i < factors.size(); ++i) out = out.kron(factors[i]);
  return out;
}

Operator single_spin(int k, Axis p, QubitCount n) {
  if (k < 1 || k > n.value()) throw std::out_of_range("single_spin: qubit index");
  std::vector<Operator> factors(n.value(), Operator::identity(2));
  factors[k - 1] = spin2(p);
  Operator out = kron_chain(factors);
  out.hermitian_flag = Operator::Flag::asserted;
  if (p == Axis::z) out.diagonal_flag = Operator::Flag::asserted;
  return out;
}

Operator collective(Axis p, QubitCount n) {
  Operator f = single_spin(1, p, n);
  for (int k = 2; k <= n.value(); ++k) f += single_spin(k, p, n);
  f.hermitian_flag = Operator::Flag::asserted;
  if (p == Axis::z) f.diagonal_flag = Operator::Flag::asserted;
  return f;
}

Operator collective_excluding(Axis p, int j, QubitCount n) {
  if (j < 1 || j > n.value()) throw std::out_of_range("collective_excluding: qubit index");
  Operator f = Operator::zero(n.dim());
  f.diagonal_flag = (p == Axis::z) ? Operator::Flag::asserted : Operator::Flag::unknown;
  for (int k = 1; k <= n.value(); ++k) {
    if (k == j) continue;
    f += single_spin(k, p, n);
  }
  f.hermitian_flag = Operator::Flag::asserted;
  return f;
}

Operator projector_from_unity(const UnityVector& s) {
  const QubitCount n(s.n());
  Operator out(n.dim());
  out.at(s.index(), s.index()) = 1.0;
  out.hermitian_flag = Operator::Flag::asserted;
  out.diagonal_flag = Operator::Flag::asserted;
  return out;
}

Operator basis_projector(std::size_t r, QubitCount n) {
  Operator out(n.dim());
  out.at(r, r) = 1.0;
  out.hermitian_flag = Operator::Flag::asserted;
  out.diagonal_flag = Operator::Flag::asserted;
  return out;
}

Operator elementary(std::size_t r, std::size_t s, QubitCount n) {
  Operator out(n.dim());
  out.at(r, s) = 1.0;
  return out;
}

TransitionOps transition_ops(std::size_t r, std::size_t s, QubitCount n) {
  if (r == s) throw std::invalid_argument("transition_ops: r == s");
  if (r >= n.dim() || s >= n.dim())
    throw std::out_of_range("transition_ops: basis index");
  TransitionOps ops{Operator(n.dim()), Operator(n.dim()), Operator(n.dim())};
  ops.x.at(r, s) = 0.5;
  ops.x.at(s, r) = 0.5;
  ops.y.at(r, s) = -0.5 * kI;
  ops.y.at(s, r) = 0.5 * kI;
  ops.z.at(r, r) = 0.5;
  ops.z.at(s, s) = -0.5;
  ops.x.hermitian_flag = Operator::Flag::asserted;
  ops.y.hermitian_flag = Operator::Flag::asserted;
  ops.z.hermitian_flag = Operator::Flag::asserted;
  ops.z.diagonal_flag = Operator::Flag::asserted;
  return ops;
}

Operator ones_operator(QubitCount n) {
  Operator out(n.dim());
  for (std::size_t i = 0; i < out.size(); ++i) out.data()[i] = 1.0;
  out.hermitian_flag = Operator::Flag::asserted;
  return out;
}

Operator expm(const Operator& h, double theta, int sign) {
  const std::size_t dim = h.dim();
  if (!h.check_hermitian(tol(dim)))
    throw std::invalid_argument("expm: generator is not hermitian");
  const double factor = static_cast<double>(sign) * theta;

  if (h.diagonal_flag == Operator::Flag::asserted || h.is_diagonal_exact()) {
    std::vector<cxd> d(dim);
    for (std::size_t i = 0; i < dim; ++i) {
      const double lam = h.at(i, i).real();
      d[i] = std::exp(-kI * factor * lam);
    }
    Operator out = Operator::diagonal(std::move(d));
    out.unitary_flag = Operator::Flag::asserted;
    return out;
  }

  const EigH eig = eig_hermitian(h);
  // V diag(e^{-i f lambda}) V^dagger
  Operator scaled = eig.vectors;  // columns scaled by the diagonal phases
  for (std::size_t k = 0; k < dim; ++k) {
    const cxd ph = std::exp(-kI * factor * eig.values[k]);
    for (std::size_t i = 0; i < dim; ++i) scaled.at(i, k) *= ph;
  }
  Operator out(dim);
  Operator vdag = eig.vectors.adjoint();
  kernels::active().matmul(out.data(), scaled.data(), vdag.data(), dim);
  out.unitary_flag = Operator::Flag::asserted;
  return out;
}

int coherence_order(std::size_t r, std::size_t t, int n) {
  // 2 M_r = n - 2 popcount(r); p = M_r - M_t = popcount(t) - popcount(r).
  (void)n;
  return static_cast<int>(std::popcount(t)) - static_cast<int>(std::popcount(r));
}

int coherence_order_excluding(std::size_t r, std::size_t t, int n, int j) {
  const std::size_t mask = ~(std::size_t{1} << (n - j));
  return static_cast<int>(std::popcount(t & mask)) -
         static_cast<int>(std::popcount(r & mask));
}

Operator CoherenceDecomposition::reconstruct(std::size_t dim) const {
  Operator sum = Operator::zero(dim);
  for (const auto& [p, comp] : terms) sum += comp;
  return sum;
}

CoherenceDecomposition coherence_decompose(const Operator& rho, QubitCount n) {
  const std::size_t dim = n.dim();
  if (rho.dim() != dim) throw std::invalid_argument("coherence_decompose: dim mismatch");
  CoherenceDecomposition out;
  for (std::size_t r = 0; r < dim; ++r)
    for (std::size_t t = 0; t < dim; ++t) {
      const cxd v = rho.at(r, t);
      if (v == cxd{}) continue;
      const int p = coherence_order(r, t, n.value());
      auto it = out.terms.find(p);
      if (it == out.terms.end())
        it = out.terms.emplace(p, Operator::zero(dim)).first;
      it->second.at(r, t) = v;
    }
  return out;
}

long long binomial(int n, int k) {
  if (k < 0 || k > n) return 0;
  long long r = 1;
  for (int i = 1; i <= k; ++i) r = r * (n - k + i) / i;
  return r;
}

long long zero_quantum_count(int n) {
  return binomial(2 * n, n) - (1LL << n);
}

}  // namespace mqs::spinalg
