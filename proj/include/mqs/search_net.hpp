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

#include "mqs/gates.hpp"
#include "mqs/operator.hpp"
#include "mqs/types.hpp"

namespace mqs::searchnet {

/// U_rs = E - E_rr - E_ss + 2 I_x^{rs}: hermitian unitary mapping |r> -> |s>.
Operator u_rs(std::size_t r, std::size_t s, QubitCount n);

/// Exponential route to the same operator: C_s(pi) exp(i pi I_y^{rs}).
Operator u_rs_exponential(std::size_t r, std::size_t s, QubitCount n);

struct Conjugator {
  Operator matrix;      // exp(-i pi/4 * sigma chain), x slots where a^s = -1
  gates::GatePlan plan; // oracle-pulse sequence realizing the same unitary
};

/// The transform diagonalizing I_y^{0s}: U I_y^{0s} U^dagger = (E_00 - E_ss)/2.
/// Rejects s = |0> (the transition operator would be undefined).
Conjugator conjugator(const UnityVector& s);

/// Plan for exp(i pi I_y^{0s}) as U^dagger C_0(-pi/2) C_s(pi/2) U.
gates::GatePlan rotation_via_oracle(const UnityVector& s);

enum class Variant { direct, composed, parallel };

std::string_view variant_name(Variant v);
Variant variant_from_name(std::string_view name);

struct Branch {
  cxd coefficient;
  gates::GatePlan plan;
};

/// The search propagator taking the uniform superposition to |s>. The direct
/// and composed variants are single unitary branches; the parallel variant is
/// a coherent four-branch sum (not unitary branch by branch).
struct SearchNetwork {
  QubitCount n;
  UnityVector s;
  Variant variant;
  std::vector<Branch> branches;

  Operator realize() const;
  const gates::GatePlan& plan() const { return branches.front().plan; }

  /// |<s| U |uniform>| and the phase of the overlap.
  struct Fidelity {
    double magnitude;
    double phase;
  };
  Fidelity fidelity() const;
};

SearchNetwork build_network(const UnityVector& s, Variant variant);

}  // namespace mqs::searchnet
