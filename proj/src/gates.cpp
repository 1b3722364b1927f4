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

#include "mqs/gates.hpp"

#include <bit>
#include <cmath>
#include <cstdio>
#include <istream>
#include <numbers>
#include <ostream>
#include <sstream>
#include <stdexcept>

#include "mqs/kernels.hpp"

namespace mqs::gates {

namespace {

constexpr cxd kI{0.0, 1.0};
constexpr double kPi = std::numbers::pi;

Axis axis_from_suffix(char c) {
  switch (c) {
    case 'x': return Axis::x;
    case 'y': return Axis::y;
    case 'z': return Axis::z;
  }
  throw std::invalid_argument("bad axis suffix");
}

char axis_suffix(Axis p) {
  switch (p) {
    case Axis::x: return 'x';
    case Axis::y: return 'y';
    case Axis::z: return 'z';
  }
  return '?';
}

/// Collective magnetization M_r = sum_k a_k^r / 2 of a basis index.
double collective_mz(std::size_t r, int n) {
  return 0.5 * (n - 2.0 * std::popcount(r));
}

/// 2x2 basis change with v sigma_z v^dagger = sigma_p.
Operator axis_frame(Axis p) {
  Operator v(2);
  const double inv_sqrt2 = 1.0 / std::sqrt(2.0);
  switch (p) {
    case Axis::z:
      return Operator::identity(2);
    case Axis::x:
      v.at(0, 0) = inv_sqrt2;
      v.at(0, 1) = inv_sqrt2;
      v.at(1, 0) = inv_sqrt2;
      v.at(1, 1) = -inv_sqrt2;
      break;
    case Axis::y:
      v.at(0, 0) = inv_sqrt2;
      v.at(0, 1) = inv_sqrt2;
      v.at(1, 0) = kI * inv_sqrt2;
      v.at(1, 1) = -kI * inv_sqrt2;
      break;
  }
  v.unitary_flag = Operator::Flag::asserted;
  return v;
}

}  // namespace

std::string_view kind_name(StepKind k) {
  switch (k) {
    case StepKind::oracle_selective: return "oracle-selective";
    case StepKind::nonselective: return "nonselective";
    case StepKind::one_qubit: return "one-qubit";
    case StepKind::two_qubit_diagonal_phase: return "two-qubit-diagonal-phase";
  }
  return "?";
}

double wrap_angle(double theta) {
  double x = std::fmod(theta, 2.0 * kPi);
  if (x < 0.0) x += 2.0 * kPi;
  return x;
}

Operator nonselective_rotation(Axis p, double theta, int m, QubitCount n) {
  if (m < 1) throw std::invalid_argument("nonselective_rotation: m >= 1 required");
  if (m == 1 && p != Axis::z) {
    // The single-spin terms of F_p commute, so the exponential factorizes.
    std::vector<Operator> factors(n.value(), spinalg::rot2(p, theta));
    Operator out = spinalg::kron_chain(factors);
    out.unitary_flag = Operator::Flag::asserted;
    return out;
  }
  // exp(-i theta F_p^m) = V exp(-i theta F_z^m) V^dagger with V the per-qubit
  // frame rotation; F_z^m is diagonal with entries M_r^m.
  std::vector<cxd> d(n.dim());
  for (std::size_t r = 0; r < n.dim(); ++r)
    d[r] = std::exp(-kI * theta * std::pow(collective_mz(r, n.value()),
                                           static_cast<double>(m)));
  Operator diag = Operator::diagonal(std::move(d));
  diag.unitary_flag = Operator::Flag::asserted;
  if (p == Axis::z) return diag;
  std::vector<Operator> frames(n.value(), axis_frame(p));
  Operator v = spinalg::kron_chain(frames);
  Operator out = v * diag * v.adjoint();
  out.unitary_flag = Operator::Flag::asserted;
  return out;
}

Operator walsh_hadamard(QubitCount n) {
  // exp(i n pi/2) exp(-i pi F_x) exp(-i (pi/2) F_y) factorizes per qubit.
  Operator one = spinalg::rot2(Axis::x, kPi) * spinalg::rot2(Axis::y, kPi / 2.0);
  one *= std::exp(kI * kPi / 2.0);
  std::vector<Operator> factors(n.value(), one);
  Operator w = spinalg::kron_chain(factors);
  w.unitary_flag = Operator::Flag::asserted;
  w.hermitian_flag = Operator::Flag::asserted;
  return w;
}

Operator nonsel_phase_c0(double beta, QubitCount n) {
  std::vector<cxd> d(n.dim(), cxd{1.0, 0.0});
  d[0] = std::exp(-kI * beta);
  Operator out = Operator::diagonal(std::move(d));
  out.unitary_flag = Operator::Flag::asserted;
  return out;
}

Operator nonsel_phase_s(double beta, QubitCount n) {
  std::vector<cxd> d(n.dim());
  for (std::size_t r = 0; r < n.dim(); ++r) {
    const double parity = (std::popcount(r) % 2 == 0) ? 1.0 : -1.0;
    d[r] = std::exp(-kI * beta * parity);
  }
  Operator out = Operator::diagonal(std::move(d));
  out.unitary_flag = Operator::Flag::asserted;
  return out;
}

Operator diffusion(double theta, QubitCount n) {
  Operator w = walsh_hadamard(n);
  Operator out = w * nonsel_phase_c0(theta, n) * w;
  out *= cxd{-1.0, 0.0};
  out.unitary_flag = Operator::Flag::asserted;
  return out;
}

Operator selective_phase(const UnityVector& s, double theta) {
  const QubitCount n(s.n());
  std::vector<cxd> d(n.dim(), cxd{1.0, 0.0});
  d[s.index()] = std::exp(-kI * theta);
  Operator out = Operator::diagonal(std::move(d));
  out.unitary_flag = Operator::Flag::asserted;
  return out;
}

Operator oracle_pulse(const UnityVector& s, double theta, Axis p) {
  std::vector<Operator> factors;
  factors.reserve(s.n());
  for (int k = 1; k <= s.n(); ++k)
    factors.push_back(spinalg::rot2(p, theta * s.at(k)));
  Operator out = spinalg::kron_chain(factors);
  out.unitary_flag = Operator::Flag::asserted;
  return out;
}

GatePlan cs_from_oracle_pulse(QubitCount n, double theta) {
  GatePlan plan(n);
  plan.append(step_rot(Axis::y, -kPi / 2.0));
  plan.append(step_uop(Axis::y, kPi / 2.0));
  plan.append(step_c0(theta));
  plan.append(step_uop(Axis::y, -kPi / 2.0));
  plan.append(step_rot(Axis::y, kPi / 2.0));
  return plan;
}

// ---- steps ----

GateStep step_cs(double theta) {
  return {StepKind::oracle_selective, "cs", {theta}, {}};
}

GateStep step_uop(Axis p, double theta) {
  return {StepKind::oracle_selective, std::string("uo") + axis_suffix(p), {theta}, {}};
}

GateStep step_c0(double theta) {
  return {StepKind::nonselective, "c0", {theta}, {}};
}

GateStep step_sphase(double beta) {
  return {StepKind::nonselective, "sphase", {beta}, {}};
}

GateStep step_rot(Axis p, double theta, int m) {
  return {StepKind::nonselective, std::string("rot_") + axis_suffix(p),
          {theta, static_cast<double>(m)}, {}};
}

GateStep step_w() { return {StepKind::nonselective, "w", {}, {}}; }

GateStep step_gphase(double theta) {
  return {StepKind::nonselective, "gphase", {theta}, {}};
}

GateStep step_r1(Axis p, double theta, int j) {
  return {StepKind::one_qubit, std::string("r1") + axis_suffix(p), {theta}, {j}};
}

GateStep step_fj(Axis p, double theta, int j) {
  return {StepKind::one_qubit, std::string("fj") + axis_suffix(p), {theta}, {j}};
}

GateStep step_lomso(double theta, std::vector<int> targets) {
  return {StepKind::oracle_selective, "lomso", {theta}, std::move(targets)};
}

GateStep step_transition_ry(double theta) {
  return {StepKind::oracle_selective, "transition_ry", {theta}, {}};
}

Operator realize_step(const GateStep& step, QubitCount n, const UnityVector* s) {
  const auto need_s = [&]() -> const UnityVector& {
    if (s == nullptr)
      throw std::invalid_argument("realize_step: oracle step '" + step.name +
                                  "' needs a marked state");
    if (s->n() != n.value())
      throw std::invalid_argument("realize_step: marked state length mismatch");
    return *s;
  };
  const auto theta = [&](std::size_t i = 0) { return step.params.at(i); };

  if (step.name == "cs") return selective_phase(need_s(), wrap_angle(theta()));
  if (step.name == "uox" || step.name == "uoy" || step.name == "uoz")
    return oracle_pulse(need_s(), theta(), axis_from_suffix(step.name.back()));
  if (step.name == "c0") return nonsel_phase_c0(theta(), n);
  if (step.name == "sphase") return nonsel_phase_s(theta(), n);
  if (step.name == "rot_x" || step.name == "rot_y" || step.name == "rot_z")
    return nonselective_rotation(axis_from_suffix(step.name.back()), theta(),
                                 static_cast<int>(step.params.at(1)), n);
  if (step.name == "w") return walsh_hadamard(n);
  if (step.name == "gphase") {
    Operator out = Operator::identity(n.dim());
    out *= std::exp(-kI * theta());
    out.unitary_flag = Operator::Flag::asserted;
    out.diagonal_flag = Operator::Flag::asserted;
    return out;
  }
  if (step.name == "r1x" || step.name == "r1y" || step.name == "r1z") {
    const int j = step.targets.at(0);
    std::vector<Operator> factors(n.value(), Operator::identity(2));
    factors.at(j - 1) = spinalg::rot2(axis_from_suffix(step.name.back()), theta());
    Operator out = spinalg::kron_chain(factors);
    out.unitary_flag = Operator::Flag::asserted;
    return out;
  }
  if (step.name == "fjx" || step.name == "fjy" || step.name == "fjz") {
    const int j = step.targets.at(0);
    std::vector<Operator> factors(n.value(),
                                  spinalg::rot2(axis_from_suffix(step.name.back()), theta()));
    factors.at(j - 1) = Operator::identity(2);
    Operator out = spinalg::kron_chain(factors);
    out.unitary_flag = Operator::Flag::asserted;
    return out;
  }
  if (step.name == "lomso") {
    std::vector<cxd> d(n.dim());
    for (std::size_t r = 0; r < n.dim(); ++r) {
      double sign = 1.0;
      for (int t : step.targets) sign *= unity_entry(r, t, n.value());
      d[r] = std::exp(-kI * theta() * sign);
    }
    Operator out = Operator::diagonal(std::move(d));
    out.unitary_flag = Operator::Flag::asserted;
    return out;
  }
  if (step.name == "zzphase") {
    const int k = step.targets.at(0), l = step.targets.at(1);
    std::vector<cxd> d(n.dim());
    for (std::size_t r = 0; r < n.dim(); ++r) {
      const double sign = unity_entry(r, k, n.value()) * unity_entry(r, l, n.value());
      d[r] = std::exp(-kI * theta() * sign);
    }
    Operator out = Operator::diagonal(std::move(d));
    out.unitary_flag = Operator::Flag::asserted;
    return out;
  }
  if (step.name == "transition_ry") {
    const UnityVector& sv = need_s();
    if (sv.all_plus())
      throw std::invalid_argument("transition_ry: marked state must differ from index 0");
    const auto ops = spinalg::transition_ops(0, sv.index(), n);
    return spinalg::expm(ops.y, theta());
  }
  throw std::invalid_argument("realize_step: unknown step '" + step.name + "'");
}

// ---- GatePlan ----

void GatePlan::append(const GatePlan& other) {
  if (!(other.n_ == n_)) throw std::invalid_argument("GatePlan::append: n mismatch");
  for (const auto& s : other.steps_) steps_.push_back(s);
}

GatePlan GatePlan::inverse() const {
  GatePlan inv(n_);
  for (auto it = steps_.rbegin(); it != steps_.rend(); ++it) {
    GateStep s = *it;
    if (!s.params.empty()) s.params[0] = -s.params[0];  // angle; modes stay
    inv.steps_.push_back(std::move(s));
  }
  return inv;
}

bool GatePlan::has_oracle_steps() const {
  for (const auto& s : steps_)
    if (s.kind == StepKind::oracle_selective) return true;
  return false;
}

std::size_t GatePlan::count_name(std::string_view name) const {
  std::size_t c = 0;
  for (const auto& s : steps_)
    if (s.name == name) ++c;
  return c;
}

std::size_t GatePlan::count_kind(StepKind kind) const {
  std::size_t c = 0;
  for (const auto& s : steps_)
    if (s.kind == kind) ++c;
  return c;
}

Operator GatePlan::realize_impl(const UnityVector* s) const {
  Operator u = Operator::identity(n_.dim());
  for (const auto& step : steps_) u = realize_step(step, n_, s) * u;
  u.unitary_flag = Operator::Flag::asserted;
  return u;
}

Operator GatePlan::realize() const {
  if (has_oracle_steps())
    throw std::invalid_argument("GatePlan::realize: plan has oracle steps; pass s");
  return realize_impl(nullptr);
}

Operator GatePlan::realize(const UnityVector& s) const { return realize_impl(&s); }

void GatePlan::serialize(std::ostream& os) const {
  os << "# gateplan n=" << n_.value() << "\n";
  char buf[64];
  for (const auto& s : steps_) {
    os << kind_name(s.kind) << ' ' << s.name;
    if (!s.params.empty()) {
      os << ' ';
      for (std::size_t i = 0; i < s.params.size(); ++i) {
        std::snprintf(buf, sizeof(buf), "%.17g", s.params[i]);
        os << (i ? "," : "") << buf;
      }
    }
    if (!s.targets.empty()) {
      os << " [";
      for (std::size_t i = 0; i < s.targets.size(); ++i)
        os << (i ? " " : "") << s.targets[i];
      os << ']';
    }
    os << '\n';
  }
}

std::string GatePlan::serialize() const {
  std::ostringstream os;
  serialize(os);
  return os.str();
}

GatePlan GatePlan::parse(std::istream& is) {
  std::string line;
  if (!std::getline(is, line)) throw std::invalid_argument("gateplan: empty input");
  int n = 0;
  if (std::sscanf(line.c_str(), "# gateplan n=%d", &n) != 1)
    throw std::invalid_argument("gateplan: bad header: " + line);
  GatePlan plan{QubitCount(n)};
  while (std::getline(is, line)) {
    if (line.empty() || line[0] == '#') continue;
    std::istringstream ls(line);
    std::string kind_str, name, token;
    ls >> kind_str >> name;
    if (name.empty()) throw std::invalid_argument("gateplan: bad line: " + line);
    GateStep step;
    step.name = name;
    if (kind_str == "oracle-selective")
      step.kind = StepKind::oracle_selective;
    else if (kind_str == "nonselective")
      step.kind = StepKind::nonselective;
    else if (kind_str == "one-qubit")
      step.kind = StepKind::one_qubit;
    else if (kind_str == "two-qubit-diagonal-phase")
      step.kind = StepKind::two_qubit_diagonal_phase;
    else
      throw std::invalid_argument("gateplan: bad kind: " + kind_str);
    while (ls >> token) {
      if (token.front() == '[') {
        std::string rest = token.substr(1);
        while (true) {
          if (!rest.empty() && rest.back() == ']') {
            rest.pop_back();
            if (!rest.empty()) step.targets.push_back(std::stoi(rest));
            break;
          }
          if (!rest.empty()) step.targets.push_back(std::stoi(rest));
          if (!(ls >> rest)) throw std::invalid_argument("gateplan: unterminated targets");
        }
      } else {
        std::istringstream ps(token);
        std::string num;
        while (std::getline(ps, num, ',')) step.params.push_back(std::stod(num));
      }
    }
    plan.append(std::move(step));
  }
  return plan;
}

GatePlan GatePlan::parse(const std::string& text) {
  std::istringstream is(text);
  return parse(is);
}

}  // namespace mqs::gates
