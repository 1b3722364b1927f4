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

#include <complex>
#include <cstdint>
#include <stdexcept>
#include <string>
#include <vector>

namespace mqs {

using cxd = std::complex<double>;

inline constexpr int kMaxQubits = 12;

/// Frobenius-norm tolerance used by all "equals" assertions: 1e-12 * dim.
inline double tol(std::size_t dim) { return 1e-12 * static_cast<double>(dim); }

/// Number of two-state particles, 1 <= n <= 12 (dense matrices must fit).
class QubitCount {
 public:
  explicit QubitCount(int n) : n_(n) {
    if (n < 1 || n > kMaxQubits)
      throw std::invalid_argument("QubitCount: n must be in [1, " +
                                  std::to_string(kMaxQubits) + "], got " +
                                  std::to_string(n));
  }
  int value() const { return n_; }
  std::size_t dim() const { return std::size_t{1} << n_; }

  friend bool operator==(QubitCount a, QubitCount b) { return a.n_ == b.n_; }

 private:
  int n_;
};

// Bit convention, fixed globally: qubit 1 is the most significant bit of the
// basis index; a_k = +1 corresponds to bit 0, i.e. the (1,0) spinor.
inline int bit_of(std::size_t index, int k, int n) {
  return static_cast<int>((index >> (n - k)) & 1u);
}

inline int unity_entry(std::size_t index, int k, int n) {
  return bit_of(index, k, n) ? -1 : +1;
}

/// The +-1 vector {a_1,...,a_n} identifying one computational basis state.
class UnityVector {
 public:
  explicit UnityVector(std::vector<int> entries) : a_(std::move(entries)) {
    if (a_.empty() || a_.size() > kMaxQubits)
      throw std::invalid_argument("UnityVector: bad length");
    for (int v : a_)
      if (v != 1 && v != -1)
        throw std::invalid_argument("UnityVector: entries must be +-1");
  }

  static UnityVector from_index(std::size_t index, QubitCount n) {
    std::vector<int> a(n.value());
    for (int k = 1; k <= n.value(); ++k) a[k - 1] = unity_entry(index, k, n.value());
    return UnityVector(std::move(a));
  }

  int n() const { return static_cast<int>(a_.size()); }
  /// a_k with 1-based qubit index.
  int at(int k) const { return a_.at(k - 1); }
  const std::vector<int>& entries() const { return a_; }

  std::size_t index() const {
    std::size_t r = 0;
    const int nn = n();
    for (int k = 1; k <= nn; ++k)
      if (a_[k - 1] == -1) r |= std::size_t{1} << (nn - k);
    return r;
  }

  bool all_plus() const {
    for (int v : a_)
      if (v != 1) return false;
    return true;
  }

  friend bool operator==(const UnityVector& x, const UnityVector& y) {
    return x.a_ == y.a_;
  }

 private:
  std::vector<int> a_;
};

}  // namespace mqs
