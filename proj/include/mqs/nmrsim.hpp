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

#include <iosfwd>
#include <optional>

#include "mqs/gates.hpp"
#include "mqs/operator.hpp"
#include "mqs/types.hpp"

namespace mqs::nmrsim {

/// Weakly coupled spin system: one ancilla spin S plus n work spins, all
/// frequencies in rad/s. The ancilla couples to every work spin.
struct SpinSystem {
  int n = 0;                          // work-spin count
  double omega_s = 0.0;               // ancilla chemical shift
  std::vector<double> omega;          // work-spin shifts, length n
  std::vector<double> j_s;            // ancilla-work couplings, length n
  std::vector<std::vector<double>> j; // work-work couplings, symmetric n x n

  /// J_S(k+1) > sum_{l<=k} J_S(l) with positive entries.
  bool superincreasing() const;
  void validate() const;

  /// Convenience system with J_Sk = 2^{k-1} (superincreasing).
  static SpinSystem doubling(int n, double omega_s = 0.0);
};

/// Hermitian density operator with its trace recorded at construction.
struct DensityOperator {
  Operator op;
  double trace_value = 0.0;

  static DensityOperator from(Operator o);
};

struct Spectrum {
  struct Line {
    double frequency;
    cxd amplitude;
  };
  std::vector<Line> lines;  // sorted by frequency

  /// Text table `frequency,amplitude_re,amplitude_im`.
  void write(std::ostream& os) const;
};

/// Diagonal weak-coupling Hamiltonian on n+1 spins, ancilla last (least
/// significant bit). Dense construction requires n + 1 <= 12.
Operator hamiltonian(const SpinSystem& sys);

/// Closed-form eigenvalue for work configuration r and ancilla sign b_s (+-1).
double eigenvalue(const SpinSystem& sys, std::size_t r, int b_s);

/// Ancilla transition frequency for work configuration r.
double ancilla_frequency(const SpinSystem& sys, std::size_t r);

/// One line per work configuration; the marked configuration is inverted in
/// phase when given.
Spectrum ancilla_spectrum(const SpinSystem& sys,
                          const std::optional<UnityVector>& marked);

/// Greedy superincreasing-knapsack decode of a measured ancilla frequency
/// back to the unity-number vector. Throws on a nonzero residual or a
/// non-superincreasing system.
UnityVector knapsack_decode(const SpinSystem& sys, double omega_measured);

enum class AncillaForm { uf, uf_v_uf };

/// Simulates the ancilla realization of the selective phase shift and the
/// direct conjugation side by side: returns (extended-system result traced
/// over the ancillas, direct C_s conjugation of rho_i). The two agree within
/// tol for any mixed work-space state.
std::pair<DensityOperator, DensityOperator> ancilla_cs_equivalence(
    const UnityVector& s, double theta, AncillaForm form,
    const DensityOperator& rho_i);

/// The oracle bit-flip permutation |x>|y> -> |x>|y xor f(x)> on n+ancillas
/// qubits, f the indicator of s; ancillas at the least significant bits.
Operator oracle_flip(const UnityVector& s, int ancillas);

/// The two-ancilla conditional phase: e^{-i theta} on ancilla pair |11>.
Operator conditional_phase(double theta, QubitCount total);

/// C_s(theta) as a product of diagonal propagators, one per longitudinal
/// base operator, each with angle theta/N.
gates::GatePlan cs_lomso_decomposition(const UnityVector& s, double theta);

/// Keeps only the diagonal (longitudinal) part. Idempotent, trace-preserving.
Operator purge(const Operator& rho);

/// Partial trace over the trailing (least significant) `ancillas` qubits.
Operator partial_trace_back(const Operator& rho, int ancillas);

struct PipelineResult {
  DensityOperator final_state;
  std::vector<double> alpha;     // per-spin longitudinal coefficients
  Operator closed_form;          // alpha_0 E + sum alpha_k eps_k a_k I_kz
};

/// Mixed-state readout pipeline: transverse initial state, oracle phase
/// shift, hard 90-degree x pulse, purge; alpha from the spectator-sign sum.
PipelineResult ensemble_pipeline(const UnityVector& s, double theta_s,
                                 const std::vector<double>& eps, double alpha0);

}  // namespace mqs::nmrsim
