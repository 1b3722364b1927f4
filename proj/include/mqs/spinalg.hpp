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

#include <array>
#include <map>

#include "mqs/operator.hpp"
#include "mqs/types.hpp"

namespace mqs::spinalg {

enum class Axis { x, y, z };

/// 2x2 building blocks (spin-1/2 language, I_p = sigma_p / 2).
Operator pauli2(Axis p);
Operator spin2(Axis p);
/// exp(-i theta sigma_p / 2) as a 2x2 matrix.
Operator rot2(Axis p, double theta);

/// Kronecker chain of per-qubit 2x2 factors, qubit 1 leftmost (most
/// significant bit).
Operator kron_chain(const std::vector<Operator>& factors);

/// I_kp embedded in the n-qubit space (1-based k).
Operator single_spin(int k, Axis p, QubitCount n);

/// F_p = sum_k I_kp.
Operator collective(Axis p, QubitCount n);

/// F_p restricted to all qubits except j (1-based).
Operator collective_excluding(Axis p, int j, QubitCount n);

/// Rank-1 diagonal projector |s><s| from the unity-number vector.
Operator projector_from_unity(const UnityVector& s);

/// Basis projector |r><r| by index.
Operator basis_projector(std::size_t r, QubitCount n);

/// E_rs elementary matrix: 1 at (r, s).
Operator elementary(std::size_t r, std::size_t s, QubitCount n);

struct TransitionOps {
  Operator x, y, z;
};

/// Single-transition operators on the {r, s} two-level subspace.
TransitionOps transition_ops(std::size_t r, std::size_t s, QubitCount n);

/// All-ones matrix (2^n x 2^n).
Operator ones_operator(QubitCount n);

/// exp(-i sign theta H) via hermitian eigendecomposition; diagonal inputs take
/// the direct exponential path. Throws when H is not hermitian within tol(dim).
Operator expm(const Operator& h, double theta, int sign = +1);

/// Coherence order of a matrix element pair: p(r,t) = M_r - M_t where
/// M_r = sum_k a_k^r / 2. Optionally computed over a subset of qubits.
int coherence_order(std::size_t r, std::size_t t, int n);
int coherence_order_excluding(std::size_t r, std::size_t t, int n, int j);

struct CoherenceDecomposition {
  std::map<int, Operator> terms;  // order p -> component

  Operator reconstruct(std::size_t dim) const;
};

/// Splits rho into components of definite coherence order by matrix-element
/// classification (exact; no tolerance involved).
CoherenceDecomposition coherence_decompose(const Operator& rho, QubitCount n);

/// Number of linearly independent zero-quantum coherences excluding
/// populations: C(2n, n) - 2^n.
long long zero_quantum_count(int n);

long long binomial(int n, int k);

}  // namespace mqs::spinalg
