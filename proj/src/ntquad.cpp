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

#include "mqs/ntquad.hpp"

#include <algorithm>
#include <cmath>
#include <limits>
#include <numbers>
#include <sstream>
#include <stdexcept>

#include "mqs/coherence.hpp"
#include "mqs/spinalg.hpp"

namespace mqs::ntquad {

namespace {
constexpr double kPi = std::numbers::pi;
constexpr cxd kI{0.0, 1.0};
}  // namespace

std::vector<long long> weights(int m_points, int order_l) {
  if (m_points < 1 || order_l < 1)
    throw std::invalid_argument("weights: M >= 1 and l >= 1 required");
  // Overflow guard: the total weight mass is (2M+1)^l.
  long long total = 1;
  for (int i = 0; i < order_l; ++i) {
    const long long base = 2LL * m_points + 1;
    if (total > std::numeric_limits<long long>::max() / base)
      throw std::overflow_error("weights: (2M+1)^l exceeds 64-bit range");
    total *= base;
  }
  std::vector<long long> phi{1};
  std::vector<long long> window(2 * m_points + 1, 1);
  for (int step = 0; step < order_l; ++step) {
    std::vector<long long> next(phi.size() + window.size() - 1, 0);
    for (std::size_t i = 0; i < phi.size(); ++i)
      for (std::size_t j = 0; j < window.size(); ++j) next[i + j] += phi[i];
    phi = std::move(next);
  }
  return phi;
}

double LatticeRule::normalization() const {
  return std::pow(2.0 * m_points + 1.0, order_l);
}

std::vector<double> default_omega(int n) {
  std::vector<double> omega;
  omega.reserve(n);
  int candidate = 2;
  auto is_prime = [](int x) {
    for (int d = 2; d * d <= x; ++d)
      if (x % d == 0) return false;
    return x >= 2;
  };
  while (static_cast<int>(omega.size()) < n) {
    if (is_prime(candidate)) {
      const double root = std::sqrt(static_cast<double>(candidate));
      const double frac = root - std::floor(root);
      if (frac > 0.0) omega.push_back(frac);  // perfect squares drop out
    }
    ++candidate;
  }
  return omega;
}

LatticeRule make_rule(int n, int m_points, int order_l) {
  return make_rule(default_omega(n), m_points, order_l);
}

LatticeRule make_rule(std::vector<double> omega, int m_points, int order_l) {
  LatticeRule rule;
  rule.omega = std::move(omega);
  rule.m_points = m_points;
  rule.order_l = order_l;
  rule.phi = weights(m_points, order_l);
  return rule;
}

namespace {

std::vector<double> node(const LatticeRule& rule, long long k) {
  std::vector<double> y(rule.omega.size());
  for (std::size_t i = 0; i < y.size(); ++i) y[i] = static_cast<double>(k) * rule.omega[i];
  return y;
}

}  // namespace

cxd integrate(const std::function<cxd(const std::vector<double>&)>& f,
              const LatticeRule& rule) {
  const long long radius = rule.k_radius();
  std::vector<cxd> terms;
  terms.reserve(2 * radius + 1);
  for (long long k = -radius; k <= radius; ++k)
    terms.push_back(static_cast<double>(rule.weight(k)) * f(node(rule, k)));
  return pairwise_sum(terms) * (1.0 / rule.normalization());
}

Operator integrate_operator(
    const std::function<Operator(const std::vector<double>&)>& f,
    const LatticeRule& rule) {
  const long long radius = rule.k_radius();
  std::vector<Operator> terms;
  terms.reserve(2 * radius + 1);
  for (long long k = -radius; k <= radius; ++k) {
    Operator t = f(node(rule, k));
    t *= cxd{static_cast<double>(rule.weight(k)), 0.0};
    terms.push_back(std::move(t));
  }
  Operator sum = pairwise_sum(std::move(terms));
  sum *= cxd{1.0 / rule.normalization(), 0.0};
  return sum;
}

cxd FourierSum::eval(const std::vector<double>& x) const {
  cxd v{};
  for (const auto& term : terms) {
    double dot = 0.0;
    for (std::size_t i = 0; i < term.m.size(); ++i) dot += term.m[i] * x[i];
    v += term.coeff * std::exp(-kI * 2.0 * kPi * dot);
  }
  return v;
}

cxd FourierSum::exact_integral() const {
  cxd v{};
  for (const auto& term : terms) {
    bool zero = true;
    for (int mk : term.m) zero = zero && (mk == 0);
    if (zero) v += term.coeff;
  }
  return v;
}

double nearest_int_distance(double x) {
  const double frac = x - std::floor(x);
  return std::min(frac, 1.0 - frac);
}

double chebyshev_u(int n, double phi) {
  const double s = std::sin(phi);
  if (s == 0.0) throw std::domain_error("chebyshev_u: sin(phi) = 0");
  return std::sin((n + 1) * phi) / s;
}

namespace {

double dot_with_omega(const std::vector<int>& m, const std::vector<double>& omega) {
  if (m.size() != omega.size())
    throw std::invalid_argument("frequency vector dimension mismatch");
  double dot = 0.0;
  for (std::size_t i = 0; i < m.size(); ++i) dot += m[i] * omega[i];
  return dot;
}

}  // namespace

cxd error_functional(const FourierSum& f, const LatticeRule& rule) {
  cxd err{};
  const double denom_scale = 2.0 * rule.m_points + 1.0;
  for (const auto& term : f.terms) {
    bool zero = true;
    for (int mk : term.m) zero = zero && (mk == 0);
    if (zero) continue;
    const double dot = dot_with_omega(term.m, rule.omega);
    const double denom = std::sin(kPi * dot);
    if (denom == 0.0)
      throw std::domain_error("error_functional: (m, omega) is an integer");
    const double ratio = std::sin(denom_scale * kPi * dot) / (denom_scale * denom);
    err -= term.coeff * std::pow(ratio, rule.order_l);
  }
  return err;
}

cxd error_functional_chebyshev(const FourierSum& f, const LatticeRule& rule) {
  cxd err{};
  const double denom_scale = 2.0 * rule.m_points + 1.0;
  for (const auto& term : f.terms) {
    bool zero = true;
    for (int mk : term.m) zero = zero && (mk == 0);
    if (zero) continue;
    const double dist = nearest_int_distance(dot_with_omega(term.m, rule.omega));
    if (dist == 0.0)
      throw std::domain_error("error_functional: (m, omega) is an integer");
    const double ratio = chebyshev_u(2 * rule.m_points, kPi * dist) / denom_scale;
    err -= term.coeff * std::pow(ratio, rule.order_l);
  }
  return err;
}

namespace {

template <typename Visit>
void for_each_constrained_m(BConstraint constraint, int n, Visit&& visit) {
  // Entries in {-1, 0, +1}; ternary counter over n digits.
  std::vector<int> m(n, -1);
  while (true) {
    int sum = 0;
    bool nonzero = false;
    for (int v : m) {
      sum += v;
      nonzero = nonzero || (v != 0);
    }
    if (nonzero && (constraint != BConstraint::zero_quantum || sum == 0)) visit(m);
    int i = 0;
    for (; i < n; ++i) {
      if (m[i] < 1) {
        ++m[i];
        break;
      }
      m[i] = -1;
    }
    if (i == n) break;
  }
}

}  // namespace

double estimate_b(const std::vector<double>& omega, double a,
                  BConstraint constraint, int n) {
  if (a < 1.0) throw std::invalid_argument("estimate_b: a >= 1 required");
  if (n < 1 || n > kMaxQubits) throw std::invalid_argument("estimate_b: bad n");
  if (static_cast<int>(omega.size()) < n)
    throw std::invalid_argument("estimate_b: omega shorter than n");
  double best = std::numeric_limits<double>::infinity();
  for_each_constrained_m(constraint, n, [&](const std::vector<int>& m) {
    double dot = 0.0;
    for (int i = 0; i < n; ++i) dot += m[i] * omega[i];
    // h(m) = prod max(1, |m_k|) = 1 on these sets; kept for the record.
    const double h = 1.0;
    best = std::min(best, nearest_int_distance(dot) * std::pow(h, a));
  });
  return best;
}

long long constraint_set_size(BConstraint constraint, int n) {
  long long count = 0;
  for_each_constrained_m(constraint, n, [&](const std::vector<int>&) { ++count; });
  return count;
}

std::string ErrorReport::to_text() const {
  std::ostringstream os;
  os << "measured_error=" << measured_error
     << " measured_raw_error=" << measured_raw_error
     << " bound_chebyshev=" << bound_chebyshev
     << " bound_all_orders=" << bound_all_orders
     << " bound_zero_quantum=" << bound_zero_quantum << " b=" << b_estimate
     << " b_all=" << b_all << " a=" << a << " violated=" << (violated ? 1 : 0);
  return os.str();
}

ErrorReport bound_report(const UnityVector& s, int j, const LatticeRule& rule,
                         double theta) {
  const int n = s.n();
  const QubitCount qn(n);
  ErrorReport report;
  report.a = 1.0;
  report.b_estimate = estimate_b(rule.omega, 1.0, BConstraint::zero_quantum, n);
  report.b_all = estimate_b(rule.omega, 1.0, BConstraint::h1_only, n);

  // Cycled exponent vs the exact oracle exponent.
  const Operator assembled =
      coherence::assemble_oracle_generator(s, j, theta, rule, /*cycle=*/true);
  Operator exact = spinalg::single_spin(j, spinalg::Axis::z, qn);
  exact *= cxd{theta * s.at(j), 0.0};
  report.measured_error = assembled.distance(exact);

  // One-sided lattice integration of the rotated structure vs the exact limit.
  const coherence::EchoProduct echo = coherence::extract_qubit(s, j, theta);
  const Operator raw = integrate_operator(
      [&](const std::vector<double>& y) {
        return coherence::rotated_structure(echo.exponent, j, qn, y);
      },
      rule);
  Operator limit = coherence::diagonal_limit(s, j);
  limit *= cxd{theta, 0.0};
  report.measured_raw_error = raw.distance(limit);

  const double denom_scale = 2.0 * rule.m_points + 1.0;
  const double geo_zq =
      std::pow(1.0 / (2.0 * denom_scale * report.b_estimate), rule.order_l);
  const double geo_all =
      std::pow(1.0 / (2.0 * denom_scale * report.b_all), rule.order_l);

  // Explicit Chebyshev sum over every pair with a nonzero frequency vector,
  // each budgeted at |<r|H_jQ|t>| = 4. Scaled by |theta| because the measured
  // raw error carries the echo exponent theta * H_jQ.
  double cheb_sq = 0.0;
  const std::size_t dim = qn.dim();
  for (std::size_t r = 0; r < dim; ++r)
    for (std::size_t t = 0; t < dim; ++t) {
      if ((r | (std::size_t{1} << (n - j))) == (t | (std::size_t{1} << (n - j))))
        continue;  // frequency vector vanishes when only bit j differs
      double dot = 0.0;
      for (int k = 1; k <= n; ++k) {
        if (k == j) continue;
        const double mk = 0.5 * (unity_entry(r, k, n) - unity_entry(t, k, n));
        dot += mk * rule.omega[k - 1];
      }
      const double dist = nearest_int_distance(dot);
      const double u = chebyshev_u(2 * rule.m_points, kPi * dist) / denom_scale;
      cheb_sq += std::pow(u * u, rule.order_l);
    }
  report.bound_chebyshev = std::abs(theta) * 4.0 * std::sqrt(cheb_sq);

  const double all_count = std::pow(4.0, n) - std::pow(2.0, n);
  report.bound_all_orders = std::abs(theta) * 4.0 * std::sqrt(all_count) * geo_all;

  const double z0 = static_cast<double>(spinalg::zero_quantum_count(n));
  report.bound_zero_quantum = 0.5 * std::abs(theta) * std::sqrt(z0) * geo_zq;

  report.violated = report.measured_error > report.bound_zero_quantum ||
                    report.measured_raw_error > report.bound_chebyshev ||
                    report.measured_raw_error > report.bound_all_orders;
  return report;
}

}  // namespace mqs::ntquad
