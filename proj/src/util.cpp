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

#include "mqs/util.hpp"

#include <cmath>
#include <stdexcept>

namespace mqs {

UnityVector random_unity(QubitCount n, Rng& rng, bool exclude_zero) {
  std::uniform_int_distribution<std::size_t> dist(
      exclude_zero ? 1 : 0, n.dim() - 1);
  return UnityVector::from_index(dist(rng), n);
}

Operator random_hermitian(std::size_t dim, Rng& rng) {
  std::uniform_real_distribution<double> dist(-1.0, 1.0);
  Operator h(dim);
  for (std::size_t r = 0; r < dim; ++r) {
    h.at(r, r) = dist(rng);
    for (std::size_t t = r + 1; t < dim; ++t) {
      const cxd v{dist(rng), dist(rng)};
      h.at(r, t) = v;
      h.at(t, r) = std::conj(v);
    }
  }
  h.hermitian_flag = Operator::Flag::asserted;
  return h;
}

Operator random_matrix(std::size_t dim, Rng& rng) {
  std::uniform_real_distribution<double> dist(-1.0, 1.0);
  Operator a(dim);
  for (std::size_t i = 0; i < a.size(); ++i) a.data()[i] = cxd{dist(rng), dist(rng)};
  return a;
}

LineFit fit_line(const std::vector<double>& x, const std::vector<double>& y) {
  if (x.size() != y.size() || x.size() < 2)
    throw std::invalid_argument("fit_line: need at least two points");
  const double count = static_cast<double>(x.size());
  double sx = 0, sy = 0, sxx = 0, sxy = 0;
  for (std::size_t i = 0; i < x.size(); ++i) {
    sx += x[i];
    sy += y[i];
    sxx += x[i] * x[i];
    sxy += x[i] * y[i];
  }
  LineFit fit;
  fit.slope = (count * sxy - sx * sy) / (count * sxx - sx * sx);
  fit.intercept = (sy - fit.slope * sx) / count;
  return fit;
}

double loglog_slope(const std::vector<double>& x, const std::vector<double>& y) {
  std::vector<double> lx(x.size()), ly(y.size());
  for (std::size_t i = 0; i < x.size(); ++i) {
    lx[i] = std::log(x[i]);
    ly[i] = std::log(y[i]);
  }
  return fit_line(lx, ly).slope;
}

}  // namespace mqs
