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

#include "mqs/coherence.hpp"

#include <cmath>
#include <numbers>
#include <stdexcept>

#include "mqs/kernels.hpp"
#include "mqs/spinalg.hpp"

namespace mqs::coherence {

namespace {

constexpr double kPi = std::numbers::pi;
constexpr cxd kI{0.0, 1.0};

using spinalg::Axis;

void require_qubit(int j, int n) {
  if (j < 1 || j > n) throw std::out_of_range("qubit index out of range");
}

/// exp(-i pi I_jy) embedded on n qubits.
Operator flip_y(int j, QubitCount n) {
  std::vector<Operator> factors(n.value(), Operator::identity(2));
  factors[j - 1] = spinalg::rot2(Axis::y, kPi);
  return spinalg::kron_chain(factors);
}

/// exp(-i theta F_jy): the collective y rotation sparing qubit j.
Operator frame_excluding(int j, QubitCount n, double theta) {
  std::vector<Operator> factors(n.value(), spinalg::rot2(Axis::y, theta));
  factors[j - 1] = Operator::identity(2);
  return spinalg::kron_chain(factors);
}

/// N theta E_ss - exp(-i pi F_y) (N theta E_ss) exp(i pi F_y); both terms are
/// diagonal (the pi rotation permutes basis projectors).
Operator echo_exponent(const UnityVector& s, double angle) {
  const QubitCount n(s.n());
  Operator h = spinalg::projector_from_unity(s);
  h *= cxd{angle, 0.0};
  const Operator rot = gates::nonselective_rotation(Axis::y, kPi, 1, n);
  Operator turned(n.dim());
  {
    Operator tmp(n.dim());
    kernels::active().matmul(tmp.data(), rot.data(), h.data(), n.dim());
    Operator rot_dag = rot.adjoint();
    kernels::active().matmul(turned.data(), tmp.data(), rot_dag.data(), n.dim());
  }
  Operator out = h - turned;
  out.hermitian_flag = Operator::Flag::asserted;
  return out;
}

Operator conjugate(const Operator& u, const Operator& a) {
  const std::size_t dim = u.dim();
  Operator tmp(dim), out(dim);
  kernels::active().matmul(tmp.data(), u.data(), a.data(), dim);
  Operator udag = u.adjoint();
  kernels::active().matmul(out.data(), tmp.data(), udag.data(), dim);
  return out;
}

}  // namespace

EchoProduct echo_hss(const UnityVector& s, double theta) {
  const QubitCount n(s.n());
  const double big = theta * static_cast<double>(n.dim());

  const Operator a = spinalg::expm(spinalg::projector_from_unity(s), big);
  const Operator rot = gates::nonselective_rotation(Axis::y, kPi, 1, n);
  Operator realized = a * rot * a.adjoint() * rot.adjoint();
  realized.unitary_flag = Operator::Flag::asserted;

  EchoProduct echo{n, s, 0, theta, std::move(realized), echo_exponent(s, big),
                   echo_exponent(s, gates::wrap_angle(big))};
  return echo;
}

EchoProduct extract_qubit(const UnityVector& s, int j, double theta) {
  const QubitCount n(s.n());
  require_qubit(j, n.value());
  const double big = theta * static_cast<double>(n.dim());

  const Operator flip = flip_y(j, n);
  const Operator frame = frame_excluding(j, n, kPi / 2.0);

  const EchoProduct base = echo_hss(s, theta);
  const Operator u_sj =
      base.realized * flip * base.realized.adjoint() * flip.adjoint();
  Operator realized = conjugate(frame, u_sj);
  realized.unitary_flag = Operator::Flag::asserted;

  const auto exponent_from = [&](double angle) {
    const Operator hss = echo_exponent(s, angle);
    Operator inner = hss - conjugate(flip, hss);
    Operator out = conjugate(frame, inner);
    out.hermitian_flag = Operator::Flag::asserted;
    return out;
  };

  EchoProduct echo{n,        s,
                   j,        theta,
                   std::move(realized), exponent_from(big),
                   exponent_from(gates::wrap_angle(big))};
  return echo;
}

gates::GatePlan extract_qubit_plan(const UnityVector& s, int j, double theta) {
  const QubitCount n(s.n());
  require_qubit(j, n.value());
  const double x = gates::wrap_angle(theta * static_cast<double>(n.dim()));
  gates::GatePlan plan(n);
  plan.append(gates::step_fj(Axis::y, -kPi / 2.0, j));
  plan.append(gates::step_r1(Axis::y, -kPi, j));
  plan.append(gates::step_cs(-x));
  plan.append(gates::step_rot(Axis::y, -kPi));
  plan.append(gates::step_cs(x));
  plan.append(gates::step_r1(Axis::y, kPi, j));
  plan.append(gates::step_cs(-x));
  plan.append(gates::step_rot(Axis::y, kPi));
  plan.append(gates::step_cs(x));
  plan.append(gates::step_fj(Axis::y, kPi / 2.0, j));
  return plan;
}

Operator phase_cycle(const Operator& rho, QubitCount n, std::optional<int> exclude,
                     int steps) {
  if (exclude) require_qubit(*exclude, n.value());
  const int min_exclusive = exclude ? n.value() - 1 : n.value();
  if (steps <= min_exclusive)
    throw std::invalid_argument("phase_cycle: step count must exceed the order range");
  if (rho.dim() != n.dim()) throw std::invalid_argument("phase_cycle: dim mismatch");

  const std::size_t dim = n.dim();
  std::vector<double> mz(dim, 0.0);
  for (std::size_t r = 0; r < dim; ++r)
    for (int k = 1; k <= n.value(); ++k) {
      if (exclude && k == *exclude) continue;
      mz[r] += 0.5 * unity_entry(r, k, n.value());
    }

  std::vector<Operator> turned;
  turned.reserve(steps);
  std::vector<cxd> d(dim);
  for (int k = 0; k < steps; ++k) {
    const double phi = 2.0 * kPi * k / steps;
    for (std::size_t r = 0; r < dim; ++r) d[r] = std::exp(-kI * phi * mz[r]);
    Operator g(dim);
    kernels::active().conj_by_diag(g.data(), rho.data(), d.data(), dim);
    turned.push_back(std::move(g));
  }
  Operator avg = pairwise_sum(std::move(turned));
  avg *= cxd{1.0 / steps, 0.0};
  if (rho.hermitian_flag == Operator::Flag::asserted)
    avg.hermitian_flag = Operator::Flag::asserted;
  return avg;
}

Operator zero_quantum_structure(const UnityVector& s, int j) {
  const QubitCount n(s.n());
  require_qubit(j, n.value());
  const Operator h_jq = extract_qubit(s, j, 1.0).exponent;
  Operator out = phase_cycle(h_jq, n, j, n.value() + 1);
  out.hermitian_flag = Operator::Flag::asserted;
  return out;
}

OffsetVector OffsetVector::superincreasing(int n) {
  OffsetVector v;
  v.f.resize(n);
  for (int k = 1; k <= n; ++k) v.f[k - 1] = std::ldexp(1.0, k - 1);
  return v;
}

bool OffsetVector::valid(int n, int j, bool zero_quantum_only) const {
  if (static_cast<int>(f.size()) < n) return false;
  std::vector<int> active;
  for (int k = 1; k <= n; ++k)
    if (k != j) active.push_back(k);
  const int d = static_cast<int>(active.size());
  if (d == 0) return true;
  std::vector<int> m(d, -1);
  while (true) {
    int sum = 0;
    bool nonzero = false;
    double freq = 0.0;
    for (int i = 0; i < d; ++i) {
      sum += m[i];
      nonzero = nonzero || m[i] != 0;
      freq += m[i] * f[active[i] - 1];
    }
    if (nonzero && (!zero_quantum_only || sum == 0) && freq == 0.0) return false;
    int i = 0;
    for (; i < d; ++i) {
      if (m[i] < 1) {
        ++m[i];
        break;
      }
      m[i] = -1;
    }
    if (i == d) break;
  }
  return true;
}

Operator diagonal_limit(const UnityVector& s, int j, const OffsetVector& offsets) {
  const QubitCount n(s.n());
  require_qubit(j, n.value());
  if (!offsets.valid(n.value(), j, /*zero_quantum_only=*/false))
    throw std::invalid_argument(
        "diagonal_limit: offsets admit a vanishing combination frequency");

  // With every combination frequency nonzero, an element survives the average
  // iff its frequency vector vanishes, i.e. r and t agree outside qubit j.
  const Operator h_jq = extract_qubit(s, j, 1.0).exponent;
  const std::size_t dim = n.dim();
  const std::size_t jbit = std::size_t{1} << (n.value() - j);
  Operator out(dim);
  for (std::size_t r = 0; r < dim; ++r)
    for (std::size_t t = 0; t < dim; ++t)
      if ((r | jbit) == (t | jbit)) out.at(r, t) = h_jq.at(r, t);
  out.hermitian_flag = Operator::Flag::asserted;
  if (out.is_diagonal_exact()) out.diagonal_flag = Operator::Flag::asserted;
  return out;
}

Operator diagonal_limit(const UnityVector& s, int j) {
  return diagonal_limit(s, j, OffsetVector::superincreasing(s.n()));
}

Operator rotated_structure(const Operator& h_jq, int j, QubitCount n,
                           const std::vector<double>& y) {
  if (static_cast<int>(y.size()) != n.value())
    throw std::invalid_argument("rotated_structure: y dimension mismatch");
  const std::size_t dim = n.dim();
  if (h_jq.dim() != dim) throw std::invalid_argument("rotated_structure: dim mismatch");
  std::vector<cxd> d(dim);
  for (std::size_t r = 0; r < dim; ++r) {
    double phase = 0.0;
    for (int k = 1; k <= n.value(); ++k) {
      if (k == j) continue;
      phase += y[k - 1] * unity_entry(r, k, n.value());
    }
    d[r] = std::exp(-kI * kPi * phase);
  }
  Operator out(dim);
  kernels::active().conj_by_diag(out.data(), h_jq.data(), d.data(), dim);
  out.hermitian_flag = h_jq.hermitian_flag;
  return out;
}

Operator assemble_oracle_generator(const UnityVector& s, int j, double theta,
                                   const ntquad::LatticeRule& rule, bool cycle) {
  const QubitCount n(s.n());
  require_qubit(j, n.value());

  if (!cycle) {
    Operator limit = diagonal_limit(s, j);
    limit *= cxd{theta / 8.0, 0.0};  // (theta/16)(H(T) + H(-T)), both equal
    limit.hermitian_flag = Operator::Flag::asserted;
    return limit;
  }

  if (rule.dimension() != n.value())
    throw std::invalid_argument("assemble_oracle_generator: rule dimension mismatch");
  const Operator h_jq = extract_qubit(s, j, 1.0).exponent;
  const std::size_t dim = n.dim();

  // Lattice sum of the two-sided rotated structure.
  const long long radius = rule.k_radius();
  std::vector<Operator> terms;
  terms.reserve(2 * (2 * radius + 1));
  std::vector<double> y(n.value());
  for (long long k = -radius; k <= radius; ++k) {
    const double w = static_cast<double>(rule.weight(k));
    for (const double sign : {1.0, -1.0}) {
      for (int i = 0; i < n.value(); ++i)
        y[i] = sign * static_cast<double>(k) * rule.omega[i];
      Operator g = rotated_structure(h_jq, j, n, y);
      g *= cxd{w, 0.0};
      terms.push_back(std::move(g));
    }
  }
  Operator inner = pairwise_sum(std::move(terms));
  inner *= cxd{1.0 / rule.normalization(), 0.0};

  // Cycle over F_jz with n steps and average.
  std::vector<double> mz(dim, 0.0);
  for (std::size_t r = 0; r < dim; ++r)
    for (int k = 1; k <= n.value(); ++k) {
      if (k == j) continue;
      mz[r] += 0.5 * unity_entry(r, k, n.value());
    }
  std::vector<Operator> cycled;
  cycled.reserve(n.value());
  std::vector<cxd> d(dim);
  for (int kp = 0; kp < n.value(); ++kp) {
    const double phi = 2.0 * kPi * kp / n.value();
    for (std::size_t r = 0; r < dim; ++r) d[r] = std::exp(-kI * phi * mz[r]);
    Operator g(dim);
    kernels::active().conj_by_diag(g.data(), inner.data(), d.data(), dim);
    cycled.push_back(std::move(g));
  }
  Operator x = pairwise_sum(std::move(cycled));
  x *= cxd{theta / (16.0 * n.value()), 0.0};
  x.hermitian_flag = Operator::Flag::asserted;
  return x;
}

Operator target_pulse(const UnityVector& s, int j, double theta) {
  const QubitCount n(s.n());
  require_qubit(j, n.value());
  const std::size_t dim = n.dim();
  std::vector<cxd> d(dim);
  for (std::size_t r = 0; r < dim; ++r) {
    const double halfsign = 0.5 * s.at(j) * unity_entry(r, j, n.value());
    d[r] = std::exp(-kI * theta * halfsign);
  }
  Operator out = Operator::diagonal(std::move(d));
  out.unitary_flag = Operator::Flag::asserted;
  return out;
}

}  // namespace mqs::coherence
