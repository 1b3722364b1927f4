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

#include "mqs/trotter.hpp"

#include <cmath>
#include <numbers>
#include <stdexcept>

#include "mqs/kernels.hpp"
#include "mqs/spinalg.hpp"

namespace mqs::trotter {

namespace {

constexpr double kPi = std::numbers::pi;
constexpr cxd kI{0.0, 1.0};

Operator exp_from_eig(const Operator& evecs, const std::vector<double>& evals,
                      double x) {
  const std::size_t dim = evecs.dim();
  Operator scaled = evecs;
  for (std::size_t c = 0; c < dim; ++c) {
    const cxd ph = std::exp(-kI * x * evals[c]);
    for (std::size_t r = 0; r < dim; ++r) scaled.at(r, c) *= ph;
  }
  Operator out(dim);
  Operator vdag = evecs.adjoint();
  kernels::active().matmul(out.data(), scaled.data(), vdag.data(), dim);
  out.unitary_flag = Operator::Flag::asserted;
  return out;
}

}  // namespace

Operator Summand::exponential(double x) const {
  return exp_from_eig(evecs, evals, x);
}

SummandSet summands(const UnityVector& s, int j, const ntquad::LatticeRule& rule,
                    double theta) {
  const QubitCount n(s.n());
  if (rule.dimension() != n.value())
    throw std::invalid_argument("summands: rule dimension mismatch");

  const coherence::EchoProduct echo = coherence::extract_qubit(s, j, 1.0);
  const Operator& h_jq = echo.exponent;
  const EigH eig = eig_hermitian(h_jq);
  const std::size_t dim = n.dim();
  const double base_coeff = 1.0 / (8.0 * n.value() * rule.normalization());

  SummandSet set{n, s, j, theta, rule, theta / 2.0, {}, {}};
  const long long radius = rule.k_radius();

  for (int sign : {+1, -1}) {
    auto& bucket = (sign > 0) ? set.plus : set.minus;
    for (long long k = -radius; k <= radius; ++k) {
      for (int kp = 0; kp < n.value(); ++kp) {
        Summand term;
        term.k = k;
        term.kprime = kp;
        term.sign = sign;
        term.coefficient = base_coeff * static_cast<double>(rule.weight(k));

        // Combined diagonal frame: exp(-i phi F_jz) exp(-i 2pi sum y I_kz)
        // with y = sign * k * omega.
        const double phi = 2.0 * kPi * kp / n.value();
        std::vector<cxd> frame(dim);
        for (std::size_t r = 0; r < dim; ++r) {
          double mz = 0.0, rot = 0.0;
          for (int q = 1; q <= n.value(); ++q) {
            if (q == j) continue;
            const double aq = unity_entry(r, q, n.value());
            mz += 0.5 * aq;
            rot += sign * static_cast<double>(k) * rule.omega[q - 1] * aq;
          }
          frame[r] = std::exp(-kI * (phi * mz + kPi * rot));
        }

        // A = coeff * P H P^dagger; eig(A) = (P V, coeff * lambda).
        Operator a(dim);
        kernels::active().conj_by_diag(a.data(), h_jq.data(), frame.data(), dim);
        a *= cxd{term.coefficient, 0.0};
        a.hermitian_flag = Operator::Flag::asserted;
        term.a = std::move(a);

        Operator pv = eig.vectors;
        for (std::size_t r = 0; r < dim; ++r)
          for (std::size_t c = 0; c < dim; ++c) pv.at(r, c) *= frame[r];
        pv.unitary_flag = Operator::Flag::asserted;
        term.evecs = std::move(pv);
        term.evals.resize(dim);
        for (std::size_t c = 0; c < dim; ++c)
          term.evals[c] = term.coefficient * eig.values[c];

        bucket.push_back(std::move(term));
      }
    }
  }
  return set;
}

Operator exact_exponential(const std::vector<Operator>& terms, double t) {
  if (terms.empty()) throw std::invalid_argument("exact_exponential: no terms");
  Operator sum = terms.front();
  for (std::size_t i = 1; i < terms.size(); ++i) sum += terms[i];
  sum.hermitian_flag = Operator::Flag::asserted;
  return spinalg::expm(sum, t);
}

namespace {

Operator exact_sum_exponential(const std::vector<Summand>& bucket, double t) {
  Operator sum = Operator::zero(bucket.front().a.dim());
  for (const auto& term : bucket) sum += term.a;
  sum.hermitian_flag = Operator::Flag::asserted;
  return spinalg::expm(sum, t);
}

}  // namespace

Operator exact_two_sided(const SummandSet& set, double t) {
  return exact_sum_exponential(set.plus, t) * exact_sum_exponential(set.minus, t);
}

namespace {

struct TermCache {
  std::vector<EigH> eigs;

  explicit TermCache(const std::vector<Operator>& terms) {
    eigs.reserve(terms.size());
    for (const auto& term : terms) eigs.push_back(eig_hermitian(term));
  }

  Operator exponential(std::size_t i, double x) const {
    return exp_from_eig(eigs[i].vectors, eigs[i].values, x);
  }
};

// Half steps ascending, a full step on the last term, half steps descending;
// applied temporally in that order.
Operator symmetric_from_cache(const TermCache& cache, std::size_t count, double t) {
  Operator u = Operator::identity(cache.eigs.front().vectors.dim());
  for (std::size_t i = 0; i + 1 < count; ++i) u = cache.exponential(i, t / 2.0) * u;
  u = cache.exponential(count - 1, t) * u;
  if (count >= 2)
    for (std::size_t i = count - 1; i-- > 0;) u = cache.exponential(i, t / 2.0) * u;
  return u;
}

}  // namespace

Operator product_first_order(const std::vector<Operator>& terms, double t,
                             int repetitions) {
  if (repetitions < 1) throw std::invalid_argument("product_first_order: L0 >= 1");
  const TermCache cache(terms);
  const double step = t / repetitions;
  Operator once = cache.exponential(0, step);
  for (std::size_t i = 1; i < terms.size(); ++i)
    once = cache.exponential(i, step) * once;
  Operator u = once;
  for (int r = 1; r < repetitions; ++r) u = u * once;
  return u;
}

Operator product_symmetric(const std::vector<Operator>& terms, double t) {
  if (terms.empty()) throw std::invalid_argument("product_symmetric: no terms");
  const TermCache cache(terms);
  return symmetric_from_cache(cache, terms.size(), t);
}

std::vector<double> suzuki_coefficients(int m) {
  if (m < 1 || m > 3)
    throw std::invalid_argument("suzuki_coefficients: m in [1, 3] supported");
  std::vector<double> coeffs{1.0};
  for (int stage = 2; stage <= m; ++stage) {
    const double p = 1.0 / (4.0 - std::pow(4.0, 1.0 / (2.0 * stage - 1.0)));
    std::vector<double> next;
    next.reserve(coeffs.size() * 5);
    for (const double outer : {p, p, 1.0 - 4.0 * p, p, p})
      for (const double inner : coeffs) next.push_back(outer * inner);
    coeffs = std::move(next);
  }
  return coeffs;
}

Operator product_recursive(const std::vector<Operator>& terms, double t, int m,
                           int repetitions) {
  if (repetitions < 1) throw std::invalid_argument("product_recursive: L >= 1");
  if (terms.empty()) throw std::invalid_argument("product_recursive: no terms");
  const TermCache cache(terms);
  const std::vector<double> coeffs = suzuki_coefficients(m);
  const double step = t / repetitions;
  Operator once = Operator::identity(terms.front().dim());
  for (const double c : coeffs)
    once = symmetric_from_cache(cache, terms.size(), c * step) * once;
  Operator u = once;
  for (int r = 1; r < repetitions; ++r) u = u * once;
  return u;
}

// ---- spec-level products over summand sets ----

namespace {

Operator cached_symmetric(const std::vector<Summand>& bucket, double t) {
  const std::size_t count = bucket.size();
  Operator u = Operator::identity(bucket.front().a.dim());
  for (std::size_t i = 0; i + 1 < count; ++i) u = bucket[i].exponential(t / 2.0) * u;
  u = bucket[count - 1].exponential(t) * u;
  if (count >= 2)
    for (std::size_t i = count - 1; i-- > 0;) u = bucket[i].exponential(t / 2.0) * u;
  return u;
}

Operator cached_recursive(const std::vector<Summand>& bucket, double t, int m,
                          int repetitions) {
  const std::vector<double> coeffs = suzuki_coefficients(m);
  const double step = t / repetitions;
  Operator once = Operator::identity(bucket.front().a.dim());
  for (const double c : coeffs) once = cached_symmetric(bucket, c * step) * once;
  Operator u = once;
  for (int r = 1; r < repetitions; ++r) u = u * once;
  return u;
}

/// Plan fragment realizing exp(-i x A_j(k, k', sign omega)) down to selective
/// phase shifts, per-qubit z rotations and the echo bridge.
void append_factor_plan(gates::GatePlan& plan, const SummandSet& set,
                        const Summand& term, double x) {
  const int n = set.n.value();
  const double phi = 2.0 * kPi * term.kprime / n;
  const double bridge_theta = x * term.coefficient;

  plan.append(gates::step_fj(gates::Axis::z, -phi, set.j));
  for (int q = 1; q <= n; ++q) {
    if (q == set.j) continue;
    const double y = term.sign * static_cast<double>(term.k) * set.rule.omega[q - 1];
    plan.append(gates::step_r1(gates::Axis::z, -2.0 * kPi * y, q));
  }
  plan.append(coherence::extract_qubit_plan(set.s, set.j, bridge_theta));
  for (int q = 1; q <= n; ++q) {
    if (q == set.j) continue;
    const double y = term.sign * static_cast<double>(term.k) * set.rule.omega[q - 1];
    plan.append(gates::step_r1(gates::Axis::z, 2.0 * kPi * y, q));
  }
  plan.append(gates::step_fj(gates::Axis::z, phi, set.j));
}

}  // namespace

SplitResult first_order(const SummandSet& set, int l0) {
  if (l0 < 1) throw std::invalid_argument("first_order: L0 >= 1");
  const double step = set.t / l0;

  gates::GatePlan plan(set.n);
  Operator u = Operator::identity(set.n.dim());
  for (const auto* bucket : {&set.minus, &set.plus}) {
    Operator once = Operator::identity(set.n.dim());
    gates::GatePlan once_plan(set.n);
    for (const auto& term : *bucket) {
      once = term.exponential(step) * once;
      append_factor_plan(once_plan, set, term, step);
    }
    for (int r = 0; r < l0; ++r) {
      u = once * u;
      plan.append(once_plan);
    }
  }
  return {std::move(u), std::move(plan)};
}

Operator suzuki_symmetric(const SummandSet& set, double t) {
  return cached_symmetric(set.plus, t);
}

SplitResult suzuki_recursive(const SummandSet& set, double t, int m,
                             int repetitions) {
  if (m < 2) throw std::invalid_argument("suzuki_recursive: m >= 2");
  if (repetitions < 1) throw std::invalid_argument("suzuki_recursive: L >= 1");

  gates::GatePlan plan(set.n);
  Operator u = Operator::identity(set.n.dim());
  const std::vector<double> coeffs = suzuki_coefficients(m);
  const double step = t / repetitions;

  for (const auto* bucket : {&set.minus, &set.plus}) {
    u = cached_recursive(*bucket, t, m, repetitions) * u;

    // Matching plan: L repetitions of the coefficient-scaled palindromes.
    const std::size_t count = bucket->size();
    for (int r = 0; r < repetitions; ++r) {
      for (const double c : coeffs) {
        const double ct = c * step;
        for (std::size_t i = 0; i + 1 < count; ++i)
          append_factor_plan(plan, set, (*bucket)[i], ct / 2.0);
        append_factor_plan(plan, set, (*bucket)[count - 1], ct);
        if (count >= 2)
          for (std::size_t i = count - 1; i-- > 0;)
            append_factor_plan(plan, set, (*bucket)[i], ct / 2.0);
      }
    }
  }
  return {std::move(u), std::move(plan)};
}

Scheme scheme_from_name(std::string_view name) {
  if (name == "first-order") return Scheme::first_order;
  if (name == "suzuki") return Scheme::suzuki;
  throw std::invalid_argument("unknown scheme: " + std::string(name));
}

std::string_view scheme_name(Scheme s) {
  return s == Scheme::first_order ? "first-order" : "suzuki";
}

ComposeResult compose_uoz(const UnityVector& s, double theta,
                          const ntquad::LatticeRule& rule, Scheme scheme,
                          const ComposeParams& params) {
  const QubitCount n(s.n());
  ComposeResult result{Operator::identity(n.dim()), gates::GatePlan(n), 0.0, {}};

  for (int j = 1; j <= n.value(); ++j) {
    const SummandSet set = summands(s, j, rule, theta);
    SplitResult split = (scheme == Scheme::first_order)
                            ? first_order(set, params.l0)
                            : suzuki_recursive(set, set.t, params.m, params.l);
    result.realized = split.realized * result.realized;
    result.plan.append(split.plan);
  }

  const Operator exact = gates::oracle_pulse(s, theta, gates::Axis::z);
  Operator diff = result.realized - exact;
  result.error = diff.operator_norm();
  result.quadrature = ntquad::bound_report(s, 1, rule, theta);
  return result;
}

long long expected_cs_count(int n, int m_points, int order_l, int m, int reps) {
  long long r = 1;
  for (int i = 1; i < m; ++i) r *= 5;
  const long long lattice = 2LL * n * (2LL * m_points * order_l + 1) - 1;
  return 8LL * n * reps * r * lattice;
}

}  // namespace mqs::trotter
