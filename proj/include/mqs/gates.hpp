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
#include <string>
#include <string_view>

#include "mqs/operator.hpp"
#include "mqs/spinalg.hpp"
#include "mqs/types.hpp"

namespace mqs::gates {

using spinalg::Axis;

enum class StepKind {
  oracle_selective,        // parameters depend on the marked state
  nonselective,            // symmetric over all qubits
  one_qubit,               // acts on an explicit qubit subset, one factor each
  two_qubit_diagonal_phase // diagonal phase on a qubit pair
};

std::string_view kind_name(StepKind k);

// Step vocabulary (name / params / targets):
//   cs theta                oracle-selective  selective phase shift
//   uox|uoy|uoz theta       oracle-selective  per-qubit oracle pulse
//   lomso theta [k...]      oracle-selective  exp(-i theta prod_t 2I_tz)
//   transition_ry theta     oracle-selective  exp(-i theta I_y^{0s})
//   c0 theta                nonselective      phase on index 0
//   sphase beta             nonselective      exp(-i beta 2I_1z x...x 2I_nz)
//   rot_x|rot_y|rot_z theta m   nonselective  exp(-i theta F_p^m)
//   w                       nonselective      Walsh-Hadamard
//   gphase theta            nonselective      global phase e^{-i theta}
//   r1x|r1y|r1z theta [j]   one-qubit         exp(-i theta I_jp)
//   fjx|fjy|fjz theta [j]   one-qubit         exp(-i theta F_jp), F_jp omits j
struct GateStep {
  StepKind kind;
  std::string name;
  std::vector<double> params;
  std::vector<int> targets;  // 1-based qubit indices
};

Operator realize_step(const GateStep& step, QubitCount n, const UnityVector* s);

/// Ordered list of labeled elementary steps. Steps are stored in application
/// order (index 0 acts first); realization is the right-to-left product of the
/// written sequence, i.e. steps.back() * ... * steps.front().
class GatePlan {
 public:
  explicit GatePlan(QubitCount n) : n_(n) {}

  QubitCount n() const { return n_; }
  const std::vector<GateStep>& steps() const { return steps_; }
  void append(GateStep step) { steps_.push_back(std::move(step)); }
  void append(const GatePlan& other);

  /// Reversed order with negated parameters: the adjoint plan.
  GatePlan inverse() const;

  bool has_oracle_steps() const;
  std::size_t count_name(std::string_view name) const;
  std::size_t count_kind(StepKind kind) const;

  /// Realizes the plan; throws if an oracle-selective step is present but no
  /// marked state was supplied.
  Operator realize() const;
  Operator realize(const UnityVector& s) const;

  void serialize(std::ostream& os) const;
  std::string serialize() const;
  static GatePlan parse(std::istream& is);
  static GatePlan parse(const std::string& text);

 private:
  Operator realize_impl(const UnityVector* s) const;
  QubitCount n_;
  std::vector<GateStep> steps_;
};

// Step constructors.
GateStep step_cs(double theta);
GateStep step_uop(Axis p, double theta);
GateStep step_c0(double theta);
GateStep step_sphase(double beta);
GateStep step_rot(Axis p, double theta, int m = 1);
GateStep step_w();
GateStep step_gphase(double theta);
GateStep step_r1(Axis p, double theta, int j);
GateStep step_fj(Axis p, double theta, int j);
GateStep step_lomso(double theta, std::vector<int> targets);
GateStep step_transition_ry(double theta);

// Named unitaries.

/// R_p(theta, m) = exp(-i theta F_p^m).
Operator nonselective_rotation(Axis p, double theta, int m, QubitCount n);

/// W = exp(i n pi/2) exp(-i pi F_x) exp(-i (pi/2) F_y); real, self-inverse.
/// The global phase is kept.
Operator walsh_hadamard(QubitCount n);

/// C_0(beta): phase e^{-i beta} on basis index 0 only.
Operator nonsel_phase_c0(double beta, QubitCount n);

/// S(beta) = exp(-i beta 2I_1z x 2I_2z x ... x 2I_nz).
Operator nonsel_phase_s(double beta, QubitCount n);

/// D(theta) = -W C_0(theta) W = -E + (1 - e^{-i theta}) P, P_ij = 1/N.
Operator diffusion(double theta, QubitCount n);

/// C_s(theta) = exp(-i theta E_ss). s = 0 and s = N-1 are permitted; those two
/// are the nonselective phase shifts.
Operator selective_phase(const UnityVector& s, double theta);

/// U_op(theta) = prod_k exp(-i theta a_k^s I_kp).
Operator oracle_pulse(const UnityVector& s, double theta, Axis p);

/// Five-step plan realizing C_s(theta) from the oracle pulse:
///   exp(-i pi/2 F_y) U_oy(-pi/2) C_0(theta) U_oy(pi/2) exp(i pi/2 F_y).
/// The plan is symbolic; the marked state binds at realization.
GatePlan cs_from_oracle_pulse(QubitCount n, double theta);
inline GatePlan cs_from_oracle_pulse(const UnityVector& s, double theta) {
  return cs_from_oracle_pulse(QubitCount(s.n()), theta);
}

/// Wraps a selective-phase angle into [0, 2pi); realization is unchanged.
double wrap_angle(double theta);

}  // namespace mqs::gates
