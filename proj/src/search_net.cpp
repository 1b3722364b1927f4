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

#include "mqs/search_net.hpp"

#include <cmath>
#include <numbers>
#include <stdexcept>

namespace mqs::searchnet {

namespace {

constexpr double kPi = std::numbers::pi;
constexpr cxd kI{0.0, 1.0};

cxd i_pow(int e) {
  switch (((e % 4) + 4) % 4) {
    case 0: return {1.0, 0.0};
    case 1: return {0.0, 1.0};
    case 2: return {-1.0, 0.0};
    default: return {0.0, -1.0};
  }
}

void require_not_zero_state(const UnityVector& s) {
  if (s.all_plus())
    throw std::invalid_argument("marked state |0> is degenerate here (I_y^{0s} undefined)");
}

}  // namespace

Operator u_rs(std::size_t r, std::size_t s, QubitCount n) {
  if (r == s) throw std::invalid_argument("u_rs: r == s");
  Operator u = Operator::identity(n.dim());
  u.at(r, r) = 0.0;
  u.at(s, s) = 0.0;
  u.at(r, s) = 1.0;
  u.at(s, r) = 1.0;
  u.hermitian_flag = Operator::Flag::asserted;
  u.unitary_flag = Operator::Flag::asserted;
  u.diagonal_flag = Operator::Flag::unknown;
  return u;
}

Operator u_rs_exponential(std::size_t r, std::size_t s, QubitCount n) {
  if (r == s) throw std::invalid_argument("u_rs_exponential: r == s");
  const auto ops = spinalg::transition_ops(r, s, n);
  Operator rot = spinalg::expm(ops.y, kPi, -1);  // exp(i pi I_y^{rs})
  Operator cs = Operator::identity(n.dim());
  cs.at(s, s) = std::exp(-kI * kPi);
  cs.diagonal_flag = Operator::Flag::asserted;
  Operator out = cs * rot;
  out.unitary_flag = Operator::Flag::asserted;
  return out;
}

Conjugator conjugator(const UnityVector& s) {
  require_not_zero_state(s);
  const QubitCount n(s.n());

  // exp(-i pi/4 K) with K the Pauli chain (x on the a^s = -1 slots, z
  // elsewhere); K^2 = E gives the two-term closed form.
  std::vector<Operator> chain;
  chain.reserve(s.n());
  for (int k = 1; k <= s.n(); ++k)
    chain.push_back(spinalg::pauli2(s.at(k) == -1 ? spinalg::Axis::x : spinalg::Axis::z));
  Operator kchain = spinalg::kron_chain(chain);
  const double c = std::cos(kPi / 4.0), sn = std::sin(kPi / 4.0);
  Operator u = Operator::identity(n.dim());
  u *= cxd{c, 0.0};
  kchain *= -kI * sn;
  u += kchain;
  u.unitary_flag = Operator::Flag::asserted;

  gates::GatePlan plan(n);
  plan.append(gates::step_rot(gates::Axis::y, -kPi / 4.0));
  plan.append(gates::step_uop(gates::Axis::y, kPi / 4.0));
  plan.append(gates::step_sphase(kPi / 4.0));
  plan.append(gates::step_uop(gates::Axis::y, -kPi / 4.0));
  plan.append(gates::step_rot(gates::Axis::y, kPi / 4.0));

  return Conjugator{std::move(u), std::move(plan)};
}

gates::GatePlan rotation_via_oracle(const UnityVector& s) {
  require_not_zero_state(s);
  const Conjugator u = conjugator(s);
  gates::GatePlan plan(u.plan.n());
  plan.append(u.plan);
  plan.append(gates::step_cs(kPi / 2.0));
  plan.append(gates::step_c0(-kPi / 2.0));
  plan.append(u.plan.inverse());
  return plan;
}

std::string_view variant_name(Variant v) {
  switch (v) {
    case Variant::direct: return "direct";
    case Variant::composed: return "composed";
    case Variant::parallel: return "parallel";
  }
  return "?";
}

Variant variant_from_name(std::string_view name) {
  if (name == "direct") return Variant::direct;
  if (name == "composed") return Variant::composed;
  if (name == "parallel") return Variant::parallel;
  throw std::invalid_argument("unknown network variant: " + std::string(name));
}

SearchNetwork build_network(const UnityVector& s, Variant variant) {
  require_not_zero_state(s);
  const QubitCount n(s.n());
  SearchNetwork net{n, s, variant, {}};

  switch (variant) {
    case Variant::direct: {
      gates::GatePlan plan(n);
      plan.append(gates::step_w());
      plan.append(gates::step_transition_ry(-kPi));  // exp(i pi I_y^{0s})
      plan.append(gates::step_cs(kPi));
      net.branches.push_back({cxd{1.0, 0.0}, std::move(plan)});
      break;
    }
    case Variant::composed: {
      gates::GatePlan plan(n);
      plan.append(gates::step_w());
      plan.append(rotation_via_oracle(s));
      plan.append(gates::step_cs(kPi));
      net.branches.push_back({cxd{1.0, 0.0}, std::move(plan)});
      break;
    }
    case Variant::parallel: {
      const int nn = n.value();
      // Branch coefficients of the coherent half-sum.
      const cxd c3 = -0.5 * i_pow(-(nn + 1));  // -(1/2) (-i)^{n+1}
      const cxd c4 = -0.5 * i_pow(nn + 1);     // -(1/2) (i)^{n+1}

      gates::GatePlan b1(n);  // U_a W, U_a = C_0(-pi/2) C_s(-pi/2)
      b1.append(gates::step_w());
      b1.append(gates::step_cs(-kPi / 2.0));
      b1.append(gates::step_c0(-kPi / 2.0));

      gates::GatePlan b2(n);  // U_a^dagger W
      b2.append(gates::step_w());
      b2.append(gates::step_c0(kPi / 2.0));
      b2.append(gates::step_cs(kPi / 2.0));

      // U_b = exp(-i pi F_z) exp(i pi/2 F_y) U_oy(pi/2) C_s(pi/2)
      gates::GatePlan b3(n);  // C_s(pi) U_b C_0(-pi/2) W
      b3.append(gates::step_w());
      b3.append(gates::step_c0(-kPi / 2.0));
      b3.append(gates::step_cs(kPi / 2.0));
      b3.append(gates::step_uop(gates::Axis::y, kPi / 2.0));
      b3.append(gates::step_rot(gates::Axis::y, -kPi / 2.0));
      b3.append(gates::step_rot(gates::Axis::z, kPi));
      b3.append(gates::step_cs(kPi));

      gates::GatePlan b4(n);  // C_0(-pi/2) U_b^dagger W
      b4.append(gates::step_w());
      b4.append(gates::step_rot(gates::Axis::z, -kPi));
      b4.append(gates::step_rot(gates::Axis::y, kPi / 2.0));
      b4.append(gates::step_uop(gates::Axis::y, -kPi / 2.0));
      b4.append(gates::step_cs(-kPi / 2.0));
      b4.append(gates::step_c0(-kPi / 2.0));

      net.branches.push_back({cxd{0.5, 0.0}, std::move(b1)});
      net.branches.push_back({cxd{0.5, 0.0}, std::move(b2)});
      net.branches.push_back({c3, std::move(b3)});
      net.branches.push_back({c4, std::move(b4)});
      break;
    }
  }
  return net;
}

Operator SearchNetwork::realize() const {
  Operator sum = Operator::zero(n.dim());
  for (const auto& b : branches) {
    Operator u = b.plan.realize(s);
    u *= b.coefficient;
    sum += u;
  }
  if (variant != Variant::parallel) sum.unitary_flag = Operator::Flag::asserted;
  return sum;
}

SearchNetwork::Fidelity SearchNetwork::fidelity() const {
  const StateVector out = apply(realize(), StateVector::uniform(n.dim()));
  const cxd overlap = out[s.index()];
  return {std::abs(overlap), std::arg(overlap)};
}

}  // namespace mqs::searchnet
