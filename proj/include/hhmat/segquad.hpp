// Copyright 2026 The hhmat Authors
//
// Licensed under the Apache License, Version 2.0 (the "License");
// you may not use this file except in compliance with the License.
// You may obtain a copy of the License at
//
//     http://www.apache.org/licenses/LICENSE-2.0
//
// Unless required by applicable law or agreed to in writing, software
// distributed under the License is distributed on an "AS IS" BASIS,
// WITHOUT WARRANTIES OR CONDITIONS OF ANY KIND, either express or implied.
// See the License for the specific language governing permissions and
// limitations under the License.

#pragma once

#include <vector>

#include "hhmat/funcat.hpp"
#include "hhmat/matcore.hpp"

namespace hhmat {

struct QuadratureSpec {
  int nodes = 16;
  bool refine = true;
  double rtol = 1e-11;

  static constexpr int kMaxNodes = 1 << 10;
};

/// Gauss–Legendre rule on [-1, 1].
struct GaussLegendreRule {
  std::vector<double> nodes;
  std::vector<double> weights;
};

/// Newton iteration on the Legendre recurrence. Rules are cached per size.
const GaussLegendreRule& gauss_legendre(int n);

/// int_0^1 g(t) dt for a scalar integrand with the n-point rule.
template <class G>
double integrate_unit(G&& g, int n) {
  const auto& rule = gauss_legendre(n);
  double sum = 0.0;
  for (std::size_t i = 0; i < rule.nodes.size(); ++i) {
    sum += rule.weights[i] * g(0.5 * (rule.nodes[i] + 1.0));
  }
  return 0.5 * sum;
}

/// int_0^1 f(tA + (1-t)B) dt. Throws SpectrumOutOfDomain or NoConvergence
/// (refinement past kMaxNodes).
HermitianMatrix segment_integral(const ScalarFunction& f, const HermitianMatrix& a,
                                 const HermitianMatrix& b, const QuadratureSpec& spec = {});

/// The same integral for f(t) = t^r, r in 1..6, by word expansion with exact
/// Beta weights. Throws RTooLarge.
HermitianMatrix poly_segment_oracle(int r, const HermitianMatrix& a, const HermitianMatrix& b);

/// tA + (1-t)B.
HermitianMatrix segment_point(const HermitianMatrix& a, const HermitianMatrix& b, double t);

}  // namespace hhmat
