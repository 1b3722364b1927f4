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

#include "mqs/coherence.hpp"
#include "mqs/gates.hpp"
#include "mqs/linalg.hpp"
#include "mqs/ntquad.hpp"
#include "mqs/operator.hpp"

namespace mqs::trotter {

/// One exponent term A_j(k, k', +-omega): the lattice-weighted, doubly
/// conjugated echo Hamiltonian. evecs/evals cache its eigendecomposition so
/// repeated exponentials cost two small matrix products.
struct Summand {
  long long k = 0;
  int kprime = 0;
  int sign = +1;  // sign of omega
  double coefficient = 0.0;
  Operator a;
  Operator evecs;
  std::vector<double> evals;

  Operator exponential(double x) const;  // exp(-i x A)
};

/// The full term family for one extracted qubit j, both omega signs, in
/// canonical (k ascending, k' ascending) order.
struct SummandSet {
  QubitCount n;
  UnityVector s;
  int j;
  double theta;
  ntquad::LatticeRule rule;
  double t;  // theta / 2
  std::vector<Summand> plus;
  std::vector<Summand> minus;

  std::size_t term_count() const { return plus.size() + minus.size(); }
};

SummandSet summands(const UnityVector& s, int j, const ntquad::LatticeRule& rule,
                    double theta);

/// exp(-i t (A_1 + ... + A_R)) through one eigendecomposition of the sum.
Operator exact_exponential(const std::vector<Operator>& terms, double t);

/// The two-sided exact product exp(-i t sum plus) exp(-i t sum minus).
Operator exact_two_sided(const SummandSet& set, double t);

// Low-level splitting products over arbitrary hermitian term lists; the
// spec-level operations below route through these, and toy-set studies use
// them directly.
Operator product_first_order(const std::vector<Operator>& terms, double t,
                             int repetitions);
Operator product_symmetric(const std::vector<Operator>& terms, double t);
Operator product_recursive(const std::vector<Operator>& terms, double t, int m,
                           int repetitions);

/// Scaled step lengths of the (2m-1)-order fractal recursion; length 5^{m-1},
/// sums to 1. m is capped at 3.
std::vector<double> suzuki_coefficients(int m);

struct SplitResult {
  Operator realized;
  gates::GatePlan plan;
};

/// {prod exp(-i t A(+)/L0)}^{L0} {prod exp(-i t A(-)/L0)}^{L0} with the plan
/// expanded down to selective phase shifts and one-qubit rotations.
SplitResult first_order(const SummandSet& set, int l0);

/// The palindromic second-order product over the plus-sign terms: half steps
/// ascending, a full step on the last term, half steps descending.
Operator suzuki_symmetric(const SummandSet& set, double t);

/// [f_{2m-1}(t/L)]^L per omega sign, concatenated; error order 2m in t and
/// L^{-(2m-1)} at fixed m.
SplitResult suzuki_recursive(const SummandSet& set, double t, int m,
                             int repetitions);

enum class Scheme { first_order, suzuki };

Scheme scheme_from_name(std::string_view name);
std::string_view scheme_name(Scheme s);

struct ComposeParams {
  int l0 = 1;  // first-order repetition count
  int m = 2;   // suzuki order parameter
  int l = 1;   // suzuki repetition count
};

struct ComposeResult {
  Operator realized;
  gates::GatePlan plan;
  double error = 0.0;  // 2-norm distance to the exact oracle pulse
  ntquad::ErrorReport quadrature;
};

/// Full oracle reconstruction U_oz(theta) as the product over every qubit j of
/// the split products; the plan contains only selective phase shifts plus
/// nonselective one-qubit steps.
ComposeResult compose_uoz(const UnityVector& s, double theta,
                          const ntquad::LatticeRule& rule, Scheme scheme,
                          const ComposeParams& params);

/// Closed-form selective-phase-shift count of the recursive scheme:
/// 8 n L R [2 n (2 M l + 1) - 1] with R = 5^{m-1}.
long long expected_cs_count(int n, int m_points, int order_l, int m, int reps);

}  // namespace mqs::trotter
