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

#include "hhmat/segquad.hpp"

#include <cmath>
#include <map>
#include <mutex>
#include <numbers>

#include "hhmat/exact.hpp"

namespace hhmat {

namespace {

GaussLegendreRule build_rule(int n) {
  GaussLegendreRule rule;
  rule.nodes.resize(n);
  rule.weights.resize(n);
  const int half = (n + 1) / 2;
  for (int i = 0; i < half; ++i) {
    long double x = std::cos(std::numbers::pi_v<long double> * (i + 0.75L) / (n + 0.5L));
    long double dp = 0.0L;
    for (int iter = 0; iter < 100; ++iter) {
      long double p0 = 1.0L;
      long double p1 = x;
      for (int k = 2; k <= n; ++k) {
        const long double p2 = ((2.0L * k - 1.0L) * x * p1 - (k - 1.0L) * p0) / k;
        p0 = p1;
        p1 = p2;
      }
      if (n == 1) p0 = 1.0L;
      dp = n * (x * p1 - p0) / (x * x - 1.0L);
      const long double dx = p1 / dp;
      x -= dx;
      if (std::abs(dx) < 1e-19L) break;
    }
    // Recompute the derivative at the converged node.
    long double p0 = 1.0L;
    long double p1 = x;
    for (int k = 2; k <= n; ++k) {
      const long double p2 = ((2.0L * k - 1.0L) * x * p1 - (k - 1.0L) * p0) / k;
      p0 = p1;
      p1 = p2;
    }
    dp = n * (x * p1 - p0) / (x * x - 1.0L);
    const long double w = 2.0L / ((1.0L - x * x) * dp * dp);
    rule.nodes[i] = static_cast<double>(-x);
    rule.nodes[n - 1 - i] = static_cast<double>(x);
    rule.weights[i] = static_cast<double>(w);
    rule.weights[n - 1 - i] = static_cast<double>(w);
  }
  if (n % 2 == 1) rule.nodes[n / 2] = 0.0;
  return rule;
}

HermitianMatrix gauss_sum(const ScalarFunction& f, const HermitianMatrix& a, const HermitianMatrix& b,
                          int n) {
  const auto& rule = gauss_legendre(n);
  Matrix acc = Matrix::Zero(a.dim(), a.dim());
  for (std::size_t i = 0; i < rule.nodes.size(); ++i) {
    const double t = 0.5 * (rule.nodes[i] + 1.0);
    acc += rule.weights[i] * apply_function(f, segment_point(a, b, t)).matrix();
  }
  return HermitianMatrix::symmetrize(0.5 * acc);
}

}  // namespace

const GaussLegendreRule& gauss_legendre(int n) {
  if (n < 1) throw Error(ErrorCode::BadParams, "Gauss–Legendre needs at least one node");
  static std::mutex mu;
  static std::map<int, GaussLegendreRule> cache;
  std::lock_guard<std::mutex> lock(mu);
  auto it = cache.find(n);
  if (it == cache.end()) it = cache.emplace(n, build_rule(n)).first;
  return it->second;
}

HermitianMatrix segment_point(const HermitianMatrix& a, const HermitianMatrix& b, double t) {
  return t * a + (1.0 - t) * b;
}

HermitianMatrix segment_integral(const ScalarFunction& f, const HermitianMatrix& a, const HermitianMatrix& b,
                                 const QuadratureSpec& spec) {
  if (a.dim() != b.dim()) throw Error(ErrorCode::DimMismatch, "segment endpoints differ in dimension");
  if (spec.nodes < 1 || !(spec.rtol > 0.0)) throw Error(ErrorCode::BadParams, "quadrature spec needs nodes >= 1, rtol > 0");
  // Endpoint spectra; interior nodes are checked by apply_function.
  require_spectrum_in_domain(f, eigenvalues(a));
  require_spectrum_in_domain(f, eigenvalues(b));

  int n = spec.nodes;
  HermitianMatrix current = gauss_sum(f, a, b, n);
  if (!spec.refine) return current;
  while (2 * n <= QuadratureSpec::kMaxNodes) {
    n *= 2;
    HermitianMatrix next = gauss_sum(f, a, b, n);
    const double change = op_norm(next - current);
    if (change < spec.rtol * unit_scale(op_norm(next))) return next;
    current = std::move(next);
  }
  throw Error(ErrorCode::NoConvergence, "segment integral of " + f.name() + " not converged at " +
                                            std::to_string(QuadratureSpec::kMaxNodes) + " nodes");
}

HermitianMatrix poly_segment_oracle(int r, const HermitianMatrix& a, const HermitianMatrix& b) {
  if (r < 1) throw Error(ErrorCode::BadParams, "oracle exponent must be >= 1");
  if (r > 6) throw Error(ErrorCode::RTooLarge, "word expansion capped at r = 6 (64 words)");
  if (a.dim() != b.dim()) throw Error(ErrorCode::DimMismatch, "segment endpoints differ in dimension");
  const Matrix id = Matrix::Identity(a.dim(), a.dim());
  const Matrix total = exact::word_expansion_integral<Matrix>(
      r, a.matrix(), b.matrix(), id, [](int rr, int j) { return exact::to_double(exact::beta_weight(rr, j)); });
  return HermitianMatrix::symmetrize(total);
}

}  // namespace hhmat
