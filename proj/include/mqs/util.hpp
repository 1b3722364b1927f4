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

#include <random>
#include <string_view>

#include "mqs/operator.hpp"
#include "mqs/types.hpp"

namespace mqs {

inline constexpr std::string_view kVersion = "0.1.0";

using Rng = std::mt19937_64;

/// Uniform random marked state; optionally excluding the all-plus vector.
UnityVector random_unity(QubitCount n, Rng& rng, bool exclude_zero = false);

/// Random hermitian matrix with entries of unit scale.
Operator random_hermitian(std::size_t dim, Rng& rng);

/// Random complex matrix (no structure).
Operator random_matrix(std::size_t dim, Rng& rng);

/// Least-squares slope/intercept of y against x.
struct LineFit {
  double slope = 0.0;
  double intercept = 0.0;
};
LineFit fit_line(const std::vector<double>& x, const std::vector<double>& y);

/// Slope of log(y) against log(x).
double loglog_slope(const std::vector<double>& x, const std::vector<double>& y);

}  // namespace mqs
