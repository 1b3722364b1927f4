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

#include <functional>
#include <string>

#include "mqs/operator.hpp"
#include "mqs/types.hpp"

namespace mqs::ntquad {

/// Integer weights Phi(M, l, k): coefficients of (sum_{k=-M}^{M} z^k)^l, by
/// iterated integer convolution. Rejected if (2M+1)^l overflows 64 bits.
std::vector<long long> weights(int m_points, int order_l);

/// Number-theoretic lattice rule over the unit n-cube: nodes k*omega for
/// k in [-M l, M l] with combinatorial integer weights.
struct LatticeRule {
  std::vector<double> omega;     // algebraic irrational lattice point
  int m_points = 0;              // M
  int order_l = 0;               // l
  std::vector<long long> phi;    // index 0 <-> k = -M l

  int dimension() const { return static_cast<int>(omega.size()); }
  long long k_radius() const { return static_cast<long long>(m_points) * order_l; }
  long long weight(long long k) const { return phi.at(static_cast<std::size_t>(k + k_radius())); }
  double normalization() const;  // (2M+1)^l
};

/// Fractional parts of sqrt(p) over the first n primes.
std::vector<double> default_omega(int n);

LatticeRule make_rule(int n, int m_points, int order_l);
LatticeRule make_rule(std::vector<double> omega, int m_points, int order_l);

/// Lattice-rule approximation of the integral of a periodic function over the
/// unit cube: (1/(2M+1)^l) sum_k Phi(M,l,k) f(k omega). The summation is
/// pairwise for deterministic rounding. Value may be scalar or Operator.
cxd integrate(const std::function<cxd(const std::vector<double>&)>& f,
              const LatticeRule& rule);
Operator integrate_operator(
    const std::function<Operator(const std::vector<double>&)>& f,
    const LatticeRule& rule);

/// A finite Fourier sum: f(x) = sum C(m) exp(-i 2pi (m, x)).
struct FourierSum {
  struct Term {
    std::vector<int> m;
    cxd coeff;
  };
  std::vector<Term> terms;

  cxd eval(const std::vector<double>& x) const;
  cxd exact_integral() const;  // the m = 0 coefficient
};

/// Quadrature error of the rule on the given Fourier coefficients:
///   -sum' C(m) (sin((2M+1) pi (m,omega)) / ((2M+1) sin(pi (m,omega))))^l.
/// Throws when some listed (m, omega) is an integer.
cxd error_functional(const FourierSum& f, const LatticeRule& rule);

/// Same value through the Chebyshev polynomial of the second kind,
/// U_2M(cos phi) with phi = pi <(m, omega)>.
cxd error_functional_chebyshev(const FourierSum& f, const LatticeRule& rule);

/// Distance from x to the nearest integer.
double nearest_int_distance(double x);

/// U_n(cos phi) = sin((n+1) phi) / sin(phi).
double chebyshev_u(int n, double phi);

enum class BConstraint {
  all_m,         // every nonzero m with entries in {-1,0,1}
  h1_only,       // the same set, stated through h(m) = 1
  zero_quantum,  // additionally sum_k m_k = 0
};

/// Empirical lattice constant: min over the constrained m set of
/// <(m, omega)> h(m)^a (h = 1 on these sets). Exhaustive for n <= 12.
double estimate_b(const std::vector<double>& omega, double a,
                  BConstraint constraint, int n);

/// Count of the constrained m vectors (diagnostic).
long long constraint_set_size(BConstraint constraint, int n);

/// Measured-vs-bound record for one oracle-reconstruction configuration.
/// measured_error is the cycled exponent error (Frobenius) and is checked
/// against bound_zero_quantum; measured_raw_error is the one-sided lattice
/// integration error, checked against the two pre-cycling bounds.
struct ErrorReport {
  double measured_error = 0.0;       // cycled exponent vs exact, Frobenius
  double measured_raw_error = 0.0;   // lattice integral vs exact limit
  double bound_chebyshev = 0.0;      // explicit Chebyshev sum, all pairs
  double bound_all_orders = 0.0;     // 4 (4^n - 2^n)^{1/2} geometric form
  double bound_zero_quantum = 0.0;   // (|theta|/2) sqrt(Z_0) geometric form
  double b_estimate = 0.0;           // zero-quantum constraint
  double b_all = 0.0;                // unconstrained-sign constraint
  double a = 1.0;
  bool violated = false;

  std::string to_text() const;
};

/// Cross-module check: reconstructs the oracle z-pulse generator for (s, j)
/// through the lattice rule and compares against the exact one, reporting the
/// measured errors next to each bound.
ErrorReport bound_report(const UnityVector& s, int j, const LatticeRule& rule,
                         double theta);

}  // namespace mqs::ntquad
