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

#include "mqs/operator.hpp"

#include <algorithm>
#include <cmath>
#include <stdexcept>

#include "mqs/kernels.hpp"
#include "mqs/linalg.hpp"

namespace mqs {

namespace {

void require_same_dim(const Operator& a, const Operator& b) {
  if (a.dim() != b.dim()) throw std::invalid_argument("operator dim mismatch");
}

}  // namespace

Operator Operator::identity(std::size_t dim) {
  Operator e(dim);
  for (std::size_t i = 0; i < dim; ++i) e.at(i, i) = 1.0;
  e.hermitian_flag = Flag::asserted;
  e.unitary_flag = Flag::asserted;
  e.diagonal_flag = Flag::asserted;
  return e;
}

Operator Operator::diagonal(std::vector<cxd> d) {
  Operator a(d.size());
  for (std::size_t i = 0; i < d.size(); ++i) a.at(i, i) = d[i];
  a.diagonal_flag = Flag::asserted;
  return a;
}

Operator Operator::operator*(const Operator& rhs) const {
  require_same_dim(*this, rhs);
  Operator c(dim_);
  // Diagonal factors reduce to row/column scaling.
  if (diagonal_flag == Flag::asserted) {
    for (std::size_t r = 0; r < dim_; ++r) {
      const cxd dr = at(r, r);
      const cxd* brow = rhs.data() + r * dim_;
      cxd* crow = c.data() + r * dim_;
      for (std::size_t t = 0; t < dim_; ++t) crow[t] = dr * brow[t];
    }
  } else if (rhs.diagonal_flag == Flag::asserted) {
    for (std::size_t r = 0; r < dim_; ++r) {
      const cxd* arow = data() + r * dim_;
      cxd* crow = c.data() + r * dim_;
      for (std::size_t t = 0; t < dim_; ++t) crow[t] = arow[t] * rhs.at(t, t);
    }
  } else {
    kernels::active().matmul(c.data(), data(), rhs.data(), dim_);
  }
  if (diagonal_flag == Flag::asserted && rhs.diagonal_flag == Flag::asserted)
    c.diagonal_flag = Flag::asserted;
  if (unitary_flag == Flag::asserted && rhs.unitary_flag == Flag::asserted)
    c.unitary_flag = Flag::asserted;
  return c;
}

Operator Operator::operator+(const Operator& rhs) const {
  Operator c = *this;
  c += rhs;
  return c;
}

Operator Operator::operator-(const Operator& rhs) const {
  Operator c = *this;
  c -= rhs;
  return c;
}

Operator& Operator::operator+=(const Operator& rhs) {
  require_same_dim(*this, rhs);
  kernels::active().axpy(data(), cxd{1.0, 0.0}, rhs.data(), size());
  unitary_flag = Flag::unknown;
  if (rhs.hermitian_flag != Flag::asserted) hermitian_flag = Flag::unknown;
  if (rhs.diagonal_flag != Flag::asserted) diagonal_flag = Flag::unknown;
  return *this;
}

Operator& Operator::operator-=(const Operator& rhs) {
  require_same_dim(*this, rhs);
  kernels::active().axpy(data(), cxd{-1.0, 0.0}, rhs.data(), size());
  unitary_flag = Flag::unknown;
  if (rhs.hermitian_flag != Flag::asserted) hermitian_flag = Flag::unknown;
  if (rhs.diagonal_flag != Flag::asserted) diagonal_flag = Flag::unknown;
  return *this;
}

Operator& Operator::operator*=(cxd alpha) {
  kernels::active().scale(data(), alpha, size());
  unitary_flag = Flag::unknown;
  if (alpha.imag() != 0.0) hermitian_flag = Flag::unknown;
  return *this;
}

Operator Operator::adjoint() const {
  Operator c(dim_);
  for (std::size_t r = 0; r < dim_; ++r)
    for (std::size_t t = 0; t < dim_; ++t) c.at(t, r) = std::conj(at(r, t));
  c.hermitian_flag = hermitian_flag;
  c.unitary_flag = unitary_flag;
  c.diagonal_flag = diagonal_flag;
  return c;
}

Operator Operator::kron(const Operator& rhs) const {
  const std::size_t p = dim_, q = rhs.dim();
  Operator c(p * q);
  for (std::size_t i = 0; i < p; ++i)
    for (std::size_t j = 0; j < p; ++j) {
      const cxd aij = at(i, j);
      if (aij == cxd{}) continue;
      for (std::size_t k = 0; k < q; ++k) {
        const cxd* brow = rhs.data() + k * q;
        cxd* crow = c.data() + (i * q + k) * (p * q) + j * q;
        for (std::size_t l = 0; l < q; ++l) crow[l] = aij * brow[l];
      }
    }
  if (diagonal_flag == Flag::asserted && rhs.diagonal_flag == Flag::asserted)
    c.diagonal_flag = Flag::asserted;
  if (hermitian_flag == Flag::asserted && rhs.hermitian_flag == Flag::asserted)
    c.hermitian_flag = Flag::asserted;
  if (unitary_flag == Flag::asserted && rhs.unitary_flag == Flag::asserted)
    c.unitary_flag = Flag::asserted;
  return c;
}

cxd Operator::trace() const {
  cxd t{};
  for (std::size_t i = 0; i < dim_; ++i) t += at(i, i);
  return t;
}

std::vector<cxd> Operator::diagonal_entries() const {
  std::vector<cxd> d(dim_);
  for (std::size_t i = 0; i < dim_; ++i) d[i] = at(i, i);
  return d;
}

double Operator::frobenius_norm() const {
  return std::sqrt(kernels::active().norm_sq(data(), size()));
}

double Operator::distance(const Operator& rhs) const {
  require_same_dim(*this, rhs);
  double s = 0.0;
  for (std::size_t i = 0; i < size(); ++i) s += std::norm(m_[i] - rhs.m_[i]);
  return std::sqrt(s);
}

double Operator::phase_distance(const Operator& rhs) const {
  require_same_dim(*this, rhs);
  cxd cross{};
  for (std::size_t i = 0; i < size(); ++i) cross += std::conj(m_[i]) * rhs.m_[i];
  const double a2 = kernels::active().norm_sq(data(), size());
  const double b2 = kernels::active().norm_sq(rhs.data(), rhs.size());
  const double d2 = std::max(0.0, a2 + b2 - 2.0 * std::abs(cross));
  return std::sqrt(d2);
}

double Operator::operator_norm() const {
  if (dim_ == 0) return 0.0;
  if (hermitian_flag == Flag::asserted) {
    const auto eig = eig_hermitian(*this);
    double m = 0.0;
    for (double v : eig.values) m = std::max(m, std::abs(v));
    return m;
  }
  Operator gram(dim_);
  Operator adj = adjoint();
  kernels::active().matmul(gram.data(), adj.data(), data(), dim_);
  gram.hermitian_flag = Flag::asserted;
  const auto eig = eig_hermitian(gram);
  double m = 0.0;
  for (double v : eig.values) m = std::max(m, v);
  return std::sqrt(std::max(0.0, m));
}

bool Operator::is_diagonal_exact() const {
  for (std::size_t r = 0; r < dim_; ++r)
    for (std::size_t t = 0; t < dim_; ++t)
      if (r != t && at(r, t) != cxd{}) return false;
  return true;
}

bool Operator::check_hermitian(double tolerance) const {
  double s = 0.0;
  for (std::size_t r = 0; r < dim_; ++r)
    for (std::size_t t = 0; t < dim_; ++t) s += std::norm(at(r, t) - std::conj(at(t, r)));
  return std::sqrt(s) <= tolerance;
}

bool Operator::check_unitary(double tolerance) const {
  Operator prod(dim_);
  Operator adj = adjoint();
  kernels::active().matmul(prod.data(), data(), adj.data(), dim_);
  return prod.distance(Operator::identity(dim_)) <= tolerance;
}

bool Operator::check_flags(double tolerance) const {
  if (hermitian_flag == Flag::asserted && !check_hermitian(tolerance)) return false;
  if (unitary_flag == Flag::asserted && !check_unitary(tolerance)) return false;
  if (diagonal_flag == Flag::asserted && !is_diagonal_exact()) return false;
  return true;
}

StateVector StateVector::basis(std::size_t dim, std::size_t index) {
  StateVector psi(dim);
  psi[index] = 1.0;
  return psi;
}

StateVector StateVector::uniform(std::size_t dim) {
  StateVector psi(dim);
  const double a = 1.0 / std::sqrt(static_cast<double>(dim));
  for (std::size_t i = 0; i < dim; ++i) psi[i] = a;
  return psi;
}

double StateVector::norm() const {
  return std::sqrt(kernels::active().norm_sq(v_.data(), v_.size()));
}

cxd StateVector::inner(const StateVector& rhs) const {
  cxd s{};
  for (std::size_t i = 0; i < v_.size(); ++i) s += std::conj(v_[i]) * rhs.v_[i];
  return s;
}

StateVector apply(const Operator& op, const StateVector& psi) {
  if (op.dim() != psi.dim()) throw std::invalid_argument("apply: dim mismatch");
  StateVector out(op.dim());
  for (std::size_t r = 0; r < op.dim(); ++r) {
    cxd s{};
    const cxd* row = op.data() + r * op.dim();
    for (std::size_t t = 0; t < op.dim(); ++t) s += row[t] * psi[t];
    out[r] = s;
  }
  return out;
}

namespace {

template <typename T>
T pairwise_impl(T* xs, std::size_t len) {
  if (len == 1) return xs[0];
  const std::size_t half = len / 2;
  return pairwise_impl(xs, half) + pairwise_impl(xs + half, len - half);
}

}  // namespace

double pairwise_sum(const std::vector<double>& xs) {
  if (xs.empty()) return 0.0;
  std::vector<double> copy = xs;
  return pairwise_impl(copy.data(), copy.size());
}

cxd pairwise_sum(const std::vector<cxd>& xs) {
  if (xs.empty()) return cxd{};
  std::vector<cxd> copy = xs;
  return pairwise_impl(copy.data(), copy.size());
}

Operator pairwise_sum(std::vector<Operator> xs) {
  if (xs.empty()) throw std::invalid_argument("pairwise_sum: empty operator list");
  return pairwise_impl(xs.data(), xs.size());
}

}  // namespace mqs
