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

#include "mqs/nmrsim.hpp"

#include <algorithm>
#include <cmath>
#include <numbers>
#include <ostream>
#include <stdexcept>

#include "mqs/kernels.hpp"
#include "mqs/spinalg.hpp"

namespace mqs::nmrsim {

namespace {
constexpr double kPi = std::numbers::pi;
constexpr cxd kI{0.0, 1.0};
}  // namespace

bool SpinSystem::superincreasing() const {
  double partial = 0.0;
  for (double v : j_s) {
    if (v <= 0.0 || v <= partial) return false;
    partial += v;
  }
  return true;
}

void SpinSystem::validate() const {
  if (n < 1 || n > kMaxQubits) throw std::invalid_argument("SpinSystem: bad n");
  if (static_cast<int>(omega.size()) != n || static_cast<int>(j_s.size()) != n)
    throw std::invalid_argument("SpinSystem: field lengths disagree with n");
  if (!j.empty()) {
    if (static_cast<int>(j.size()) != n)
      throw std::invalid_argument("SpinSystem: coupling matrix size");
    for (int a = 0; a < n; ++a) {
      if (static_cast<int>(j[a].size()) != n)
        throw std::invalid_argument("SpinSystem: coupling matrix size");
      for (int b = 0; b < n; ++b)
        if (j[a][b] != j[b][a])
          throw std::invalid_argument("SpinSystem: couplings must be symmetric");
    }
  }
}

SpinSystem SpinSystem::doubling(int n, double omega_s) {
  SpinSystem sys;
  sys.n = n;
  sys.omega_s = omega_s;
  sys.omega.resize(n, 0.0);
  sys.j_s.resize(n);
  for (int k = 0; k < n; ++k) sys.j_s[k] = std::ldexp(1.0, k);
  sys.j.assign(n, std::vector<double>(n, 0.0));
  return sys;
}

DensityOperator DensityOperator::from(Operator o) {
  DensityOperator rho;
  rho.trace_value = o.trace().real();
  o.hermitian_flag = Operator::Flag::asserted;
  rho.op = std::move(o);
  return rho;
}

void Spectrum::write(std::ostream& os) const {
  os << "frequency,amplitude_re,amplitude_im\n";
  for (const auto& line : lines)
    os << line.frequency << ',' << line.amplitude.real() << ','
       << line.amplitude.imag() << '\n';
}

Operator hamiltonian(const SpinSystem& sys) {
  sys.validate();
  const QubitCount total(sys.n + 1);  // throws when the dense form won't fit
  const int anc = sys.n + 1;          // ancilla is the last qubit
  using spinalg::Axis;

  Operator h = spinalg::single_spin(anc, Axis::z, total);
  h *= cxd{sys.omega_s, 0.0};
  for (int k = 1; k <= sys.n; ++k) {
    Operator term = spinalg::single_spin(k, Axis::z, total);
    term *= cxd{sys.omega[k - 1], 0.0};
    h += term;
  }
  const Operator sz = spinalg::single_spin(anc, Axis::z, total);
  for (int k = 1; k <= sys.n; ++k) {
    Operator term = sz * spinalg::single_spin(k, Axis::z, total);
    term *= cxd{sys.j_s[k - 1], 0.0};
    term.diagonal_flag = Operator::Flag::asserted;
    h += term;
  }
  if (!sys.j.empty())
    for (int k = 1; k <= sys.n; ++k)
      for (int l = k + 1; l <= sys.n; ++l) {
        Operator term = spinalg::single_spin(k, Axis::z, total) *
                        spinalg::single_spin(l, Axis::z, total);
        term *= cxd{sys.j[k - 1][l - 1], 0.0};
        term.diagonal_flag = Operator::Flag::asserted;
        h += term;
      }
  h.hermitian_flag = Operator::Flag::asserted;
  h.diagonal_flag = Operator::Flag::asserted;
  return h;
}

double eigenvalue(const SpinSystem& sys, std::size_t r, int b_s) {
  if (b_s != 1 && b_s != -1) throw std::invalid_argument("eigenvalue: b_s = +-1");
  double coupled = sys.omega_s;
  for (int k = 1; k <= sys.n; ++k)
    coupled += 0.5 * unity_entry(r, k, sys.n) * sys.j_s[k - 1];
  double e = 0.5 * b_s * coupled;
  for (int k = 1; k <= sys.n; ++k)
    e += 0.5 * unity_entry(r, k, sys.n) * sys.omega[k - 1];
  if (!sys.j.empty())
    for (int k = 1; k <= sys.n; ++k)
      for (int l = k + 1; l <= sys.n; ++l)
        e += 0.25 * unity_entry(r, k, sys.n) * unity_entry(r, l, sys.n) *
             sys.j[k - 1][l - 1];
  return e;
}

double ancilla_frequency(const SpinSystem& sys, std::size_t r) {
  double w = sys.omega_s;
  for (int k = 1; k <= sys.n; ++k)
    w += 0.5 * unity_entry(r, k, sys.n) * sys.j_s[k - 1];
  return w;
}

Spectrum ancilla_spectrum(const SpinSystem& sys,
                          const std::optional<UnityVector>& marked) {
  sys.validate();
  const std::size_t count = std::size_t{1} << sys.n;
  const std::size_t marked_index = marked ? marked->index() : count;
  Spectrum spec;
  spec.lines.reserve(count);
  for (std::size_t r = 0; r < count; ++r) {
    const cxd amp = (r == marked_index) ? cxd{-1.0, 0.0} : cxd{1.0, 0.0};
    spec.lines.push_back({ancilla_frequency(sys, r), amp});
  }
  std::stable_sort(spec.lines.begin(), spec.lines.end(),
                   [](const Spectrum::Line& a, const Spectrum::Line& b) {
                     return a.frequency < b.frequency;
                   });
  return spec;
}

UnityVector knapsack_decode(const SpinSystem& sys, double omega_measured) {
  sys.validate();
  if (!sys.superincreasing())
    throw std::invalid_argument("knapsack_decode: couplings are not superincreasing");

  double total_j = 0.0;
  for (double v : sys.j_s) total_j += v;
  // f_S = omega - Omega_S + (1/2) sum J_Sk, then f_S = sum b_k J_Sk, b in {0,1}.
  double residual = omega_measured - sys.omega_s + 0.5 * total_j;
  const double eps = 1e-9 * (1.0 + total_j);

  std::vector<int> a(sys.n, 0);
  for (int k = sys.n; k >= 1; --k) {
    const double jk = sys.j_s[k - 1];
    if (residual >= jk - eps) {
      residual -= jk;
      a[k - 1] = +1;  // b_k = 1 <-> a_k = +1
    } else {
      a[k - 1] = -1;
    }
  }
  if (std::abs(residual) > eps)
    throw std::invalid_argument("knapsack_decode: inconsistent frequency (residual " +
                                std::to_string(residual) + ")");
  return UnityVector(std::move(a));
}

Operator oracle_flip(const UnityVector& s, int ancillas) {
  const QubitCount total(s.n() + ancillas);
  const std::size_t dim = total.dim();
  const std::size_t target = s.index();
  // Flips the first ancilla (qubit n+1) on work index s.
  const std::size_t flip_bit = std::size_t{1} << (ancillas - 1);
  Operator u(dim);
  for (std::size_t x = 0; x < dim; ++x) {
    const std::size_t work = x >> ancillas;
    u.at(work == target ? x ^ flip_bit : x, x) = 1.0;
  }
  u.unitary_flag = Operator::Flag::asserted;
  u.hermitian_flag = Operator::Flag::asserted;  // involution
  return u;
}

Operator conditional_phase(double theta, QubitCount total) {
  const std::size_t dim = total.dim();
  std::vector<cxd> d(dim, cxd{1.0, 0.0});
  for (std::size_t x = 0; x < dim; ++x)
    if ((x & 3u) == 3u) d[x] = std::exp(-kI * theta);  // both ancillas set
  Operator u = Operator::diagonal(std::move(d));
  u.unitary_flag = Operator::Flag::asserted;
  return u;
}

Operator purge(const Operator& rho) {
  Operator out(rho.dim());
  for (std::size_t i = 0; i < rho.dim(); ++i) out.at(i, i) = rho.at(i, i);
  out.diagonal_flag = Operator::Flag::asserted;
  out.hermitian_flag = rho.hermitian_flag;
  return out;
}

Operator partial_trace_back(const Operator& rho, int ancillas) {
  const std::size_t block = std::size_t{1} << ancillas;
  const std::size_t dim = rho.dim() / block;
  Operator out(dim);
  for (std::size_t r = 0; r < dim; ++r)
    for (std::size_t t = 0; t < dim; ++t) {
      cxd sum{};
      for (std::size_t b = 0; b < block; ++b)
        sum += rho.at(r * block + b, t * block + b);
      out.at(r, t) = sum;
    }
  out.hermitian_flag = rho.hermitian_flag;
  return out;
}

std::pair<DensityOperator, DensityOperator> ancilla_cs_equivalence(
    const UnityVector& s, double theta, AncillaForm form,
    const DensityOperator& rho_i) {
  const QubitCount n(s.n());
  if (rho_i.op.dim() != n.dim())
    throw std::invalid_argument("ancilla_cs_equivalence: work state dim mismatch");

  const int ancillas = (form == AncillaForm::uf) ? 1 : 2;
  Operator rho_anc;
  Operator sequence;
  if (form == AncillaForm::uf) {
    if (theta != kPi)
      throw std::invalid_argument(
          "ancilla_cs_equivalence: the single-flip form realizes theta = pi only");
    // (1/2) E - S_x
    rho_anc = Operator(2);
    rho_anc.at(0, 0) = 0.5;
    rho_anc.at(1, 1) = 0.5;
    rho_anc.at(0, 1) = -0.5;
    rho_anc.at(1, 0) = -0.5;
    sequence = oracle_flip(s, 1);
  } else {
    // |0><0| x |1><1|
    rho_anc = Operator(4);
    rho_anc.at(1, 1) = 1.0;
    const Operator uf = oracle_flip(s, 2);
    sequence = uf * conditional_phase(theta, QubitCount(s.n() + 2)) * uf;
  }
  rho_anc.hermitian_flag = Operator::Flag::asserted;

  Operator extended = rho_i.op.kron(rho_anc);
  Operator evolved = sequence * extended * sequence.adjoint();

  const Operator cs = gates::selective_phase(s, theta);
  Operator direct(n.dim());
  kernels::active().conj_by_diag(direct.data(), rho_i.op.data(),
                                 cs.diagonal_entries().data(), n.dim());

  return {DensityOperator::from(partial_trace_back(evolved, ancillas)),
          DensityOperator::from(std::move(direct))};
}

gates::GatePlan cs_lomso_decomposition(const UnityVector& s, double theta) {
  const QubitCount n(s.n());
  const double base = theta / static_cast<double>(n.dim());
  gates::GatePlan plan(n);
  // All 2^n longitudinal base operators, grouped by body order.
  for (int order = 0; order <= n.value(); ++order) {
    std::vector<int> subset(order);
    // first subset of this size
    for (int i = 0; i < order; ++i) subset[i] = i + 1;
    while (true) {
      if (order == 0) {
        plan.append(gates::step_gphase(base));
      } else {
        double sign = 1.0;
        for (int q : subset) sign *= s.at(q);
        plan.append(gates::step_lomso(base * sign, subset));
      }
      // next combination
      int i = order - 1;
      while (i >= 0 && subset[i] == n.value() - (order - 1 - i)) --i;
      if (i < 0) break;
      ++subset[i];
      for (int q = i + 1; q < order; ++q) subset[q] = subset[q - 1] + 1;
      if (order == 0) break;
    }
    if (order == 0) continue;
  }
  return plan;
}

PipelineResult ensemble_pipeline(const UnityVector& s, double theta_s,
                                 const std::vector<double>& eps, double alpha0) {
  const QubitCount n(s.n());
  if (static_cast<int>(eps.size()) != n.value())
    throw std::invalid_argument("ensemble_pipeline: eps length mismatch");
  const std::size_t dim = n.dim();
  using spinalg::Axis;

  Operator rho = Operator::identity(dim);
  rho *= cxd{alpha0, 0.0};
  for (int k = 1; k <= n.value(); ++k) {
    Operator term = spinalg::single_spin(k, Axis::x, n);
    term *= cxd{eps[k - 1], 0.0};
    rho += term;
  }
  rho.hermitian_flag = Operator::Flag::asserted;

  const Operator cs = gates::selective_phase(s, theta_s);
  Operator shifted(dim);
  kernels::active().conj_by_diag(shifted.data(), rho.data(),
                                 cs.diagonal_entries().data(), dim);

  const Operator pulse = gates::nonselective_rotation(Axis::x, kPi / 2.0, 1, n);
  Operator rotated = pulse * shifted * pulse.adjoint();
  Operator purged = purge(rotated);
  purged.hermitian_flag = Operator::Flag::asserted;

  // Spectator-sign enumeration of the longitudinal coefficients.
  std::vector<double> alpha(n.value(), 0.0);
  const double unit = 2.0 * theta_s / static_cast<double>(dim);
  for (int k = 1; k <= n.value(); ++k) {
    const std::size_t patterns = dim >> 1;  // 2^{n-1} spectator configurations
    double sum = 0.0;
    for (std::size_t pat = 0; pat < patterns; ++pat) {
      double product = 1.0;
      std::size_t bit = 0;
      for (int i = 1; i <= n.value(); ++i) {
        if (i == k) continue;
        const double sigma = ((pat >> bit) & 1u) ? -1.0 : 1.0;
        product *= 1.0 + s.at(i) * sigma;
        ++bit;
      }
      sum += std::sin(unit * product);
    }
    alpha[k - 1] = (2.0 / static_cast<double>(dim)) * sum;
  }

  Operator closed = Operator::identity(dim);
  closed *= cxd{alpha0, 0.0};
  for (int k = 1; k <= n.value(); ++k) {
    Operator term = spinalg::single_spin(k, Axis::z, n);
    term *= cxd{alpha[k - 1] * eps[k - 1] * s.at(k), 0.0};
    closed += term;
  }
  closed.hermitian_flag = Operator::Flag::asserted;

  return {DensityOperator::from(std::move(purged)), std::move(alpha),
          std::move(closed)};
}

}  // namespace mqs::nmrsim
