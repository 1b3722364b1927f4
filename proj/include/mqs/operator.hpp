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

#include <optional>
#include <vector>

#include "mqs/types.hpp"

namespace mqs {

/// Dense complex square matrix with semantic flags. The carrier for every
/// gate, Hamiltonian and density operator in the library. All operations are
/// value-semantic; nothing here mutates shared state.
class Operator {
 public:
  enum class Flag { unknown, asserted };

  Operator() : dim_(0) {}
  explicit Operator(std::size_t dim) : dim_(dim), m_(dim * dim) {}

  static Operator zero(std::size_t dim) { return Operator(dim); }
  static Operator identity(std::size_t dim);
  static Operator diagonal(std::vector<cxd> d);

  std::size_t dim() const { return dim_; }
  bool empty() const { return dim_ == 0; }

  cxd& at(std::size_t r, std::size_t c) { return m_[r * dim_ + c]; }
  const cxd& at(std::size_t r, std::size_t c) const { return m_[r * dim_ + c]; }
  cxd* data() { return m_.data(); }
  const cxd* data() const { return m_.data(); }
  std::size_t size() const { return m_.size(); }

  Flag hermitian_flag = Flag::unknown;
  Flag unitary_flag = Flag::unknown;
  Flag diagonal_flag = Flag::unknown;

  Operator operator*(const Operator& rhs) const;
  Operator operator+(const Operator& rhs) const;
  Operator operator-(const Operator& rhs) const;
  Operator& operator+=(const Operator& rhs);
  Operator& operator-=(const Operator& rhs);
  Operator& operator*=(cxd alpha);
  friend Operator operator*(cxd alpha, Operator a) {
    a *= alpha;
    return a;
  }

  Operator adjoint() const;
  Operator kron(const Operator& rhs) const;
  cxd trace() const;
  std::vector<cxd> diagonal_entries() const;

  double frobenius_norm() const;
  /// ||this - rhs||_F
  double distance(const Operator& rhs) const;
  /// min over a global phase of ||this - e^{i phi} rhs||_F
  double phase_distance(const Operator& rhs) const;
  /// Largest singular value (2-norm). Exact for hermitian-flagged input via
  /// the eigenvalues, otherwise through A^dagger A.
  double operator_norm() const;

  bool is_diagonal_exact() const;
  bool check_hermitian(double tolerance) const;
  bool check_unitary(double tolerance) const;
  /// Verifies every asserted flag within the given tolerance.
  bool check_flags(double tolerance) const;

 private:
  std::size_t dim_;
  std::vector<cxd> m_;
};

/// Pure state amplitudes.
class StateVector {
 public:
  explicit StateVector(std::size_t dim) : v_(dim) {}
  explicit StateVector(std::vector<cxd> v) : v_(std::move(v)) {}

  static StateVector basis(std::size_t dim, std::size_t index);
  static StateVector uniform(std::size_t dim);

  std::size_t dim() const { return v_.size(); }
  cxd& operator[](std::size_t i) { return v_[i]; }
  const cxd& operator[](std::size_t i) const { return v_[i]; }
  const std::vector<cxd>& amplitudes() const { return v_; }

  double norm() const;
  cxd inner(const StateVector& rhs) const;  // <this|rhs>

 private:
  std::vector<cxd> v_;
};

StateVector apply(const Operator& op, const StateVector& psi);

/// result[i] = sum of values[i] by pairwise (tree) reduction; deterministic
/// regardless of accumulation chunking.
double pairwise_sum(const std::vector<double>& xs);
cxd pairwise_sum(const std::vector<cxd>& xs);
Operator pairwise_sum(std::vector<Operator> xs);

}  // namespace mqs
