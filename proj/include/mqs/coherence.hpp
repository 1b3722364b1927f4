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

#include "mqs/gates.hpp"
#include "mqs/ntquad.hpp"
#include "mqs/operator.hpp"
#include "mqs/types.hpp"

namespace mqs::coherence {

/// Spin-echo product together with its effective Hamiltonian exponent.
/// realized == exp(-i exponent) within tol; for the extracted-qubit echo the
/// wrapped exponent (selective angles reduced mod 2pi) generates the same
/// unitary with norm bounded by 8 pi.
struct EchoProduct {
  QubitCount n;
  UnityVector s;
  int j = 0;  // 0 for the full echo, else the extracted qubit
  double theta = 0.0;
  Operator realized;
  Operator exponent;          // theta * H
  Operator wrapped_exponent;  // theta * H with wrapped selective angles
};

/// U_ss = exp(-i theta N E_ss) exp(-i pi F_y) exp(i theta N E_ss) exp(i pi F_y);
/// the echo cancels the even-body part of the expanded projector.
EchoProduct echo_hss(const UnityVector& s, double theta);

/// U_sj echo isolating the interactions that involve qubit j, conjugated into
/// the transverse frame: exp(-i theta H_jQ).
EchoProduct extract_qubit(const UnityVector& s, int j, double theta);

/// Plan realizing exp(-i theta H_jQ) from selective phase shifts and
/// nonselective rotations only.
gates::GatePlan extract_qubit_plan(const UnityVector& s, int j, double theta);

/// N-step collective z-rotation average: keeps only the zero-order coherences
/// (order counted over the included qubits when one is excluded).
Operator phase_cycle(const Operator& rho, QubitCount n, std::optional<int> exclude,
                     int steps);

/// H_jQ^0: the zero-quantum part of H_jQ (cycled over all qubits but j).
Operator zero_quantum_structure(const UnityVector& s, int j);

/// Per-spin offset frequencies; entry j is ignored when extracting qubit j.
struct OffsetVector {
  std::vector<double> f;

  static OffsetVector superincreasing(int n);  // f_k = 2^{k-1}

  /// All combination frequencies sum_{k != j} m_k f_k with m in {-1,0,1},
  /// m != 0, must be nonzero. With zero_quantum_only, only zero-sum m vectors
  /// are required nonzero.
  bool valid(int n, int j, bool zero_quantum_only) const;
};

/// The averaged operator H_jQ(T) in the exact integral limit: matrix elements
/// whose combination frequency vanishes survive, all others are zeroed. With
/// generic offsets this is the diagonal part of H_jQ and has 2-norm 4.
Operator diagonal_limit(const UnityVector& s, int j,
                        const OffsetVector& offsets);
Operator diagonal_limit(const UnityVector& s, int j);

/// The integrand operator G_jQ(y) = exp(-i 2pi sum_{k!=j} y_k I_kz) H_jQ
/// exp(+i ...), evaluated from a precomputed H_jQ.
Operator rotated_structure(const Operator& h_jq, int j, QubitCount n,
                           const std::vector<double>& y);

/// The hermitian exponent X such that exp(-i X) approximates
/// exp(-i theta a_j^s I_jz): lattice-rule average of the rotated structure,
/// phase-cycled over F_jz when cycle is set, else the exact two-sided limit.
Operator assemble_oracle_generator(const UnityVector& s, int j, double theta,
                                   const ntquad::LatticeRule& rule, bool cycle);

/// exp(-i theta a_j^s I_jz), the single-qubit oracle z-pulse.
Operator target_pulse(const UnityVector& s, int j, double theta);

}  // namespace mqs::coherence
