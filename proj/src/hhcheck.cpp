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

#include "hhmat/hhcheck.hpp"

#include <algorithm>
#include <cmath>
#include <limits>
#include <sstream>

namespace hhmat {

namespace {

[[noreturn]] void unmet(const std::string& what) { throw Error(ErrorCode::HypothesisUnmet, what); }

void require_flag(const ScalarFunction& f, Flag FunctionFlags::*flag, const char* name) {
  if (f.flags().*flag != Flag::True) unmet(f.name() + " is not declared " + name);
}

/// Case (i) unital, or case (ii) 0 in J, f(0) <= 0 and Phi(I) <= I, with
/// 0 < Phi(I) additionally when `strict`.
MapHypothesis require_map_hypothesis(const ScalarFunction& f, const UnitalityReport& u, bool strict) {
  if (u.status == Unitality::Unital) return MapHypothesis::Unital;
  const bool below_identity = strict ? u.status == Unitality::Subunital : u.lambda_max <= 1.0 + 1e-10;
  if (!below_identity) {
    std::ostringstream os;
    os << "map is neither unital nor " << (strict ? "0 < Phi(I) <= I" : "Phi(I) <= I")
       << " (lambda(Phi(I)) in [" << u.lambda_min << ", " << u.lambda_max << "])";
    unmet(os.str());
  }
  if (!f.domain().contains(0.0)) unmet("map is not unital and 0 is outside the domain of " + f.name());
  if (f.flags().f0_nonpositive != Flag::True) unmet("map is not unital and f(0) <= 0 is not declared for " + f.name());
  return MapHypothesis::Subunital;
}

void require_source_dim(const PositiveLinearMap& phi, const HermitianMatrix& a) {
  if (a.dim() != phi.source_dim()) {
    throw Error(ErrorCode::DimMismatch, phi.descriptor() + " expects dimension " +
                                            std::to_string(phi.source_dim()) + ", got " + std::to_string(a.dim()));
  }
}

void require_spectrum_in(const HermitianMatrix& h, const Interval& iv, const char* label) {
  const RVector w = eigenvalues(h);
  const double slack = 1e-9 * (iv.bounded() ? iv.length() : unit_scale(w.cwiseAbs().maxCoeff()));
  if (!iv.contains(w(0), slack) || !iv.contains(w(w.size() - 1), slack)) {
    std::ostringstream os;
    os << "spectrum of " << label << " [" << w(w.size() - 1) << ", " << w(0) << "] is not inside " << iv.str();
    unmet(os.str());
  }
}

OrderVerdict scalar_verdict(double lhs, double rhs, double tol) {
  OrderVerdict v;
  v.margin = rhs - lhs;
  v.scale = unit_scale(std::max(std::abs(lhs), std::abs(rhs)));
  v.holds = v.margin >= -tol * v.scale;
  return v;
}

NormComparison compare_norm(const NormSpec& spec, const HermitianMatrix& lhs, const HermitianMatrix& rhs,
                            double rhs_factor, double tol) {
  NormComparison c;
  c.spec = spec;
  c.lhs = ui_norm(lhs, spec);
  c.rhs = rhs_factor * ui_norm(rhs, spec);
  c.holds = c.rhs - c.lhs >= -tol * unit_scale(std::max(c.lhs, c.rhs));
  return c;
}

HermitianMatrix conjugate(const Matrix& u, const HermitianMatrix& h) {
  return HermitianMatrix::symmetrize(u * h.matrix() * u.adjoint());
}

}  // namespace

std::string_view to_string(MapHypothesis h) {
  return h == MapHypothesis::Unital ? "unital" : "subunital";
}

bool ChainLink::holds() const {
  return std::visit([](const auto& r) { return r.holds; }, result);
}

double ChainLink::normalized_margin() const {
  return std::visit([](const auto& r) { return r.normalized_margin(); }, result);
}

double ChainReport::worst_margin() const {
  double worst = std::numeric_limits<double>::infinity();
  for (const auto& l : links) worst = std::min(worst, l.normalized_margin());
  return worst;
}

ChainReport loewner_chain(std::vector<std::string> labels, std::vector<HermitianMatrix> terms, double tol) {
  ChainReport r;
  r.holds = true;
  for (std::size_t i = 0; i + 1 < terms.size(); ++i) {
    ChainLink link{labels[i], labels[i + 1], loewner_leq(terms[i], terms[i + 1], tol)};
    r.holds = r.holds && link.holds();
    r.links.push_back(std::move(link));
  }
  r.labels = std::move(labels);
  r.terms = std::move(terms);
  return r;
}

ChainReport check_scalar_hh(const ScalarFunction& f, double x, double y, const CheckOptions& opt) {
  if (!(x < y)) throw Error(ErrorCode::BadParams, "scalar Hermite–Hadamard needs x < y");
  if (f.flags().convex != Flag::True) throw Error(ErrorCode::NotConvexFlag, f.name() + " is not declared convex");
  if (!f.domain().contains(x) || !f.domain().contains(y)) {
    throw Error(ErrorCode::SpectrumOutOfDomain, "[x, y] is not inside " + f.domain().str());
  }
  const double width = y - x;
  auto integrand = [&](double s) { return f(x + width * s); };
  int n = std::max(opt.quad.nodes, 1);
  double integral = integrate_unit(integrand, n);
  while (2 * n <= QuadratureSpec::kMaxNodes) {
    n *= 2;
    const double next = integrate_unit(integrand, n);
    const bool done = std::abs(next - integral) < 1e-14 * unit_scale(std::abs(next));
    integral = next;
    if (done) break;
  }
  auto one = [](double v) { return HermitianMatrix::diagonal(std::vector<double>{v}); };
  return loewner_chain({"midpoint", "integral", "trapezoid"},
                       {one(width * f(0.5 * (x + y))), one(width * integral), one(width * 0.5 * (f(x) + f(y)))},
                       opt.tol);
}

JensenReport check_jensen_map(const ScalarFunction& f, const PositiveLinearMap& phi, const HermitianMatrix& a,
                              const CVector& x, const CheckOptions& opt) {
  require_flag(f, &FunctionFlags::convex, "convex");
  require_source_dim(phi, a);
  if (x.size() != phi.target_dim()) throw Error(ErrorCode::DimMismatch, "vector length differs from target dimension");
  const UnitalityReport u = unitality_status(phi);
  const double norm = x.norm();

  JensenReport r;
  if (u.status == Unitality::Unital && std::abs(norm - 1.0) <= 1e-10) {
    r.hypothesis = MapHypothesis::Unital;
  } else {
    if (norm > 1.0 + 1e-10) unmet("||x|| > 1");
    if (u.status == Unitality::Unital) {
      // Unital with ||x|| < 1 still qualifies under the f(0) <= 0 branch.
      if (!f.domain().contains(0.0) || f.flags().f0_nonpositive != Flag::True) {
        unmet("||x|| != 1 and f(0) <= 0 with 0 in J does not hold");
      }
      r.hypothesis = MapHypothesis::Subunital;
    } else {
      r.hypothesis = require_map_hypothesis(f, u, true);
    }
  }
  const double arg = x.dot(apply_map(phi, a).matrix() * x).real();
  const double slack = 1e-9 * (f.domain().bounded() ? f.domain().length() : unit_scale(std::abs(arg)));
  if (!f.domain().contains(arg, slack)) {
    throw Error(ErrorCode::SpectrumOutOfDomain, "<Phi(A)x, x> = " + std::to_string(arg) + " outside " + f.domain().str());
  }
  r.lhs = f(std::clamp(arg, f.domain().lo, f.domain().hi));
  r.rhs = x.dot(apply_map(phi, apply_function(f, a)).matrix() * x).real();
  r.verdict = scalar_verdict(r.lhs, r.rhs, opt.tol);
  return r;
}

MajorizationCheck check_theorem_t1(const ScalarFunction& f, const PositiveLinearMap& phi, const HermitianMatrix& a,
                                   const HermitianMatrix& b, const CheckOptions& opt) {
  require_flag(f, &FunctionFlags::convex, "convex");
  require_source_dim(phi, a);
  require_source_dim(phi, b);
  MajorizationCheck r;
  r.hypothesis = require_map_hypothesis(f, unitality_status(phi), true);
  r.lhs = apply_function(f, 0.5 * (apply_map(phi, a) + apply_map(phi, b)));
  r.rhs = apply_map(phi, segment_integral(f, a, b, opt.quad));
  r.report = weak_majorization(r.lhs, r.rhs, opt.tol);
  return r;
}

TraceReport check_trace_corollary(const ScalarFunction& f, const HermitianMatrix& a, const HermitianMatrix& b,
                                  const CheckOptions& opt) {
  require_flag(f, &FunctionFlags::convex, "convex");
  if (a.dim() != b.dim()) throw Error(ErrorCode::DimMismatch, "A and B differ in dimension");
  TraceReport r;
  r.lhs = apply_function(f, 0.5 * (a + b)).trace();
  r.rhs = segment_integral(f, a, b, opt.quad).trace();
  r.verdict = scalar_verdict(r.lhs, r.rhs, opt.tol);
  return r;
}

double NormComparison::normalized_margin() const {
  return (rhs - lhs) / unit_scale(std::max(lhs, rhs));
}

double NormComparisonReport::worst_margin() const {
  double worst = std::numeric_limits<double>::infinity();
  for (const auto& c : comparisons) worst = std::min(worst, c.normalized_margin());
  return worst;
}

NormComparisonReport check_power_norm_corollary(double r, const PositiveLinearMap& phi, const HermitianMatrix& a,
                                                const HermitianMatrix& b, const std::vector<NormSpec>& specs,
                                                const CheckOptions& opt) {
  if (!(r > 1.0)) throw Error(ErrorCode::BadParams, "power corollary needs r > 1");
  require_source_dim(phi, a);
  require_source_dim(phi, b);
  for (const HermitianMatrix* m : {&a, &b}) {
    const OrderVerdict psd = psd_check(*m, opt.tol);
    if (!psd.holds) throw Error(ErrorCode::NotPSD, "lambda_min = " + std::to_string(psd.margin));
  }
  const ScalarFunction f = builtin("power", {r});
  NormComparisonReport out;
  out.hypothesis = require_map_hypothesis(f, unitality_status(phi), true);
  const HermitianMatrix lhs = apply_function(f, 0.5 * (apply_map(phi, a) + apply_map(phi, b)));
  const HermitianMatrix rhs = apply_map(phi, segment_integral(f, a, b, opt.quad));
  out.holds = true;
  for (const auto& spec : specs) {
    validate(spec, phi.target_dim());
    out.comparisons.push_back(compare_norm(spec, lhs, rhs, 1.0, opt.tol));
    out.holds = out.holds && out.comparisons.back().holds;
  }
  return out;
}

BourinReport check_bourin_t2(const ScalarFunction& f, const std::vector<PositiveLinearMap>& maps,
                             const std::vector<HermitianMatrix>& a_list, const CheckOptions& opt) {
  if (maps.empty() || maps.size() != a_list.size()) {
    throw Error(ErrorCode::BadParams, "need one matrix per map and at least one of each");
  }
  require_flag(f, &FunctionFlags::convex, "convex");
  require_flag(f, &FunctionFlags::increasing, "increasing");
  for (std::size_t i = 0; i < maps.size(); ++i) require_source_dim(maps[i], a_list[i]);

  const PositiveLinearMap psi = diag_block_map(maps);
  BourinReport r;
  r.hypothesis = require_map_hypothesis(f, unitality_status(psi), false);

  std::vector<HermitianMatrix> images;
  images.reserve(a_list.size());
  for (const auto& ai : a_list) images.push_back(apply_function(f, ai));
  r.lhs = apply_function(f, apply_map(psi, block_diagonal(a_list)));
  r.rhs = apply_map(psi, block_diagonal(images));
  r.dominance = eigen_dominance(r.lhs, r.rhs, opt.tol);
  if (r.dominance.holds) {
    r.witness = unitary_witness(r.lhs, r.rhs, opt.tol);
    if (r.witness) {
      r.witness_unitary = is_unitary(*r.witness, 1e-9);
      r.witness_check = loewner_leq(r.lhs, conjugate(r.witness->adjoint(), r.rhs), opt.tol);
    }
  }
  r.holds = r.dominance.holds && r.witness_unitary && r.witness_check && r.witness_check->holds;
  return r;
}

std::vector<double> default_t_grid(int points) {
  std::vector<double> grid(points);
  for (int i = 0; i < points; ++i) grid[i] = points == 1 ? 0.5 : static_cast<double>(i) / (points - 1);
  return grid;
}

ConditionalChainReport check_theorem_t3(const ScalarFunction& f, const PositiveLinearMap& phi,
                                        const HermitianMatrix& a, const HermitianMatrix& b, const Matrix& u,
                                        const std::vector<double>& t_grid, const CheckOptions& opt) {
  require_flag(f, &FunctionFlags::convex, "convex");
  require_flag(f, &FunctionFlags::increasing, "increasing");
  require_source_dim(phi, a);
  require_source_dim(phi, b);
  if (u.rows() != phi.target_dim() || !is_unitary(u, 1e-9)) {
    throw Error(ErrorCode::NotUnitary, "supplied U is not a unitary of the target dimension");
  }
  ConditionalChainReport r;
  r.map_hypothesis = require_map_hypothesis(f, unitality_status(phi), false);

  const HermitianMatrix pa = apply_map(phi, a);
  const HermitianMatrix pb = apply_map(phi, b);
  const HermitianMatrix fa = apply_map(phi, apply_function(f, a));
  const HermitianMatrix fb = apply_map(phi, apply_function(f, b));
  for (double t : t_grid) {
    const HermitianMatrix lhs = apply_function(f, segment_point(pa, pb, t));
    const HermitianMatrix rhs = conjugate(u, segment_point(fa, fb, t));
    OrderVerdict v = loewner_leq(lhs, rhs, opt.tol);
    if (!v.holds) {
      std::ostringstream os;
      os << "supplied-U hypothesis fails at t = " << t << " (margin " << v.margin << ")";
      unmet(os.str());
    }
    r.t_grid.push_back(t);
    r.hypothesis.push_back(std::move(v));
  }
  // Phi is linear, so f(Phi(tA + (1-t)B)) = f(t Phi(A) + (1-t) Phi(B)).
  HermitianMatrix integral = segment_integral(f, pa, pb, opt.quad);
  HermitianMatrix mean = 0.5 * (fa + fb);
  r.dominance = eigen_dominance(integral, mean, opt.tol);
  r.conclusion.labels = {"integral", "mean"};
  r.conclusion.terms = {std::move(integral), std::move(mean)};
  r.conclusion.links.push_back(ChainLink{"integral", "mean", r.dominance});
  r.conclusion.holds = r.dominance.holds;
  return r;
}

AlphaResult mond_pecaric_alpha(const ScalarFunction& f, double omega, double Omega) {
  if (!std::isfinite(omega) || !std::isfinite(Omega) || !(omega < Omega)) {
    throw Error(ErrorCode::BadInterval, "need finite omega < Omega");
  }
  if (!f.domain().contains(Interval::closed(omega, Omega))) {
    throw Error(ErrorCode::BadInterval, "[omega, Omega] is not inside the domain " + f.domain().str());
  }
  using ld = long double;
  const ld lo = omega;
  const ld hi = Omega;
  const ld f_lo = f.eval_extended(lo);
  const ld f_hi = f.eval_extended(hi);
  auto g = [&](ld t) { return ((hi - t) * f_lo + (t - lo) * f_hi) / ((hi - lo) * f.eval_extended(t)); };

  const int n = kAlphaGridPoints;
  int best = 0;
  ld best_value = -std::numeric_limits<ld>::infinity();
  for (int i = 0; i < n; ++i) {
    const ld t = i + 1 == n ? hi : lo + (hi - lo) * i / (n - 1);
    const ld ft = f.eval_extended(t);
    if (!(ft > 0)) {
      std::ostringstream os;
      os << f.name() << "(" << static_cast<double>(t) << ") = " << static_cast<double>(ft) << " is not positive";
      throw Error(ErrorCode::NotPositive, os.str());
    }
    const ld value = g(t);
    if (value > best_value) {
      best_value = value;
      best = i;
    }
  }
  // Golden-section maximization on the bracket around the best grid point.
  ld a = lo + (hi - lo) * std::max(best - 1, 0) / (n - 1);
  ld b = lo + (hi - lo) * std::min(best + 1, n - 1) / (n - 1);
  const ld ratio = (std::sqrt(5.0L) - 1.0L) / 2.0L;
  ld c = b - ratio * (b - a);
  ld d = a + ratio * (b - a);
  ld gc = g(c);
  ld gd = g(d);
  while (b - a >= 1e-12L) {
    if (gc >= gd) {
      b = d;
      d = c;
      gd = gc;
      c = b - ratio * (b - a);
      gc = g(c);
    } else {
      a = c;
      c = d;
      gc = gd;
      d = a + ratio * (b - a);
      gd = g(d);
    }
  }
  const ld t_star = 0.5L * (a + b);
  const ld g_star = g(t_star);
  AlphaResult r;
  r.omega = omega;
  r.Omega = Omega;
  if (g_star >= best_value) {
    r.alpha = static_cast<double>(g_star);
    r.argmax_t = static_cast<double>(t_star);
  } else {
    r.alpha = static_cast<double>(best_value);
    r.argmax_t = static_cast<double>(best + 1 == n ? hi : lo + (hi - lo) * best / (n - 1));
  }
  return r;
}

MondPecaricReport check_theorem_t4(const ScalarFunction& f, const PositiveLinearMap& phi, const HermitianMatrix& a,
                                   const HermitianMatrix& b, const Interval& interval, const CheckOptions& opt) {
  require_flag(f, &FunctionFlags::convex, "convex");
  require_source_dim(phi, a);
  require_source_dim(phi, b);
  if (!interval.bounded() || !f.domain().contains(interval)) {
    unmet(interval.str() + " is not a compact subinterval of the domain of " + f.name());
  }
  require_spectrum_in(a, interval, "A");
  require_spectrum_in(b, interval, "B");
  // The bound rests on Phi(omega I) = omega I; without unitality it fails
  // already for Phi(X) = X/2.
  if (unitality_status(phi).status != Unitality::Unital) unmet("map is not unital");

  MondPecaricReport r;
  try {
    r.alpha = mond_pecaric_alpha(f, interval.lo, interval.hi);
  } catch (const Error& e) {
    if (e.code() == ErrorCode::NotPositive) unmet(e.what());
    throw;
  }
  const HermitianMatrix pa = apply_map(phi, a);
  const HermitianMatrix pb = apply_map(phi, b);
  r.lhs = apply_map(phi, segment_integral(f, a, b, opt.quad));
  r.rhs = r.alpha.alpha * (0.5 * (apply_function(f, pa) + apply_function(f, pb)));
  r.verdict = loewner_leq(r.lhs, r.rhs, opt.tol);
  return r;
}

double NormChainReport::worst_margin() const {
  double worst = std::numeric_limits<double>::infinity();
  for (const auto& c : first) worst = std::min(worst, c.normalized_margin());
  for (const auto& c : second) worst = std::min(worst, c.normalized_margin());
  return worst;
}

NormChainReport check_norm_chain_corollary(const ScalarFunction& f, const PositiveLinearMap& phi,
                                           const HermitianMatrix& a, const HermitianMatrix& b,
                                           const Interval& interval, const std::vector<NormSpec>& specs,
                                           const CheckOptions& opt) {
  require_flag(f, &FunctionFlags::convex, "convex");
  require_source_dim(phi, a);
  require_source_dim(phi, b);
  if (!interval.bounded() || !f.domain().contains(interval)) {
    unmet(interval.str() + " is not a compact subinterval of the domain of " + f.name());
  }
  require_spectrum_in(a, interval, "A");
  require_spectrum_in(b, interval, "B");
  for (const auto& spec : specs) validate(spec, phi.target_dim());

  NormChainReport r;
  r.specs = specs;
  const UnitalityReport u = unitality_status(phi);
  if (u.status == Unitality::Unital) {
    r.hypothesis = MapHypothesis::Unital;
  } else if (u.status == Unitality::Subunital && interval.contains(0.0) && std::abs(f(0.0)) <= 1e-12) {
    r.hypothesis = MapHypothesis::Subunital;
  } else {
    unmet("map is not unital, and 0 in [omega, Omega], f(0) = 0, 0 < Phi(I) <= I does not hold");
  }

  const HermitianMatrix pa = apply_map(phi, a);
  const HermitianMatrix pb = apply_map(phi, b);
  const HermitianMatrix mid = apply_function(f, 0.5 * (pa + pb));
  const HermitianMatrix image = apply_map(phi, segment_integral(f, a, b, opt.quad));
  const HermitianMatrix mean = 0.5 * (apply_function(f, pa) + apply_function(f, pb));
  auto psd = [&](const HermitianMatrix& h) { return psd_check(h, opt.tol).holds; };

  if (psd(mid) && psd(image)) {
    for (const auto& spec : specs) r.first.push_back(compare_norm(spec, mid, image, 1.0, opt.tol));
  } else {
    r.first_skip_reason = "first-link matrices are not all positive semidefinite";
  }

  if (r.hypothesis != MapHypothesis::Unital) {
    r.second_skip_reason = "second link needs a unital map";
  } else {
    try {
      r.alpha = mond_pecaric_alpha(f, interval.lo, interval.hi);
    } catch (const Error& e) {
      if (e.code() != ErrorCode::NotPositive) throw;
      r.second_skip_reason = std::string("second link needs f > 0: ") + e.what();
    }
    if (r.alpha) {
      if (psd(image) && psd(mean)) {
        for (const auto& spec : specs) r.second.push_back(compare_norm(spec, image, mean, r.alpha->alpha, opt.tol));
      } else {
        r.second_skip_reason = "second-link matrices are not all positive semidefinite";
      }
    }
  }
  r.holds = true;
  for (const auto& c : r.first) r.holds = r.holds && c.holds;
  for (const auto& c : r.second) r.holds = r.holds && c.holds;
  return r;
}

RefinementChainReport check_refinement_chain(const ScalarFunction& f, const HermitianMatrix& a,
                                             const HermitianMatrix& b, int k, int p, const CheckOptions& opt) {
  if (f.flags().operator_convex != Flag::True) {
    throw Error(ErrorCode::NotOperatorConvexFlag, f.name() + " is not declared operator convex");
  }
  if (k < 1 || p < 1) throw Error(ErrorCode::BadParams, "k and p must be positive integers");
  if (a.dim() != b.dim()) throw Error(ErrorCode::DimMismatch, "A and B differ in dimension");
  long long pieces = 1;
  for (int i = 0; i < p; ++i) {
    pieces *= k;
    if (pieces > 4096) throw Error(ErrorCode::BadParams, "k^p above 4096");
  }
  const int n = static_cast<int>(pieces);
  const int dim = a.dim();

  std::vector<HermitianMatrix> at_grid;
  at_grid.reserve(n + 1);
  for (int i = 0; i <= n; ++i) at_grid.push_back(apply_function(f, segment_point(a, b, static_cast<double>(i) / n)));

  Matrix midpoint_sum = Matrix::Zero(dim, dim);
  Matrix trapezoid_sum = Matrix::Zero(dim, dim);
  for (int i = 0; i < n; ++i) {
    const double t = (2.0 * i + 1.0) / (2.0 * n);
    midpoint_sum += apply_function(f, segment_point(a, b, t)).matrix();
    trapezoid_sum += at_grid[i + 1].matrix() + at_grid[i].matrix();
  }

  std::vector<HermitianMatrix> terms;
  terms.push_back(apply_function(f, 0.5 * (a + b)));
  terms.push_back(HermitianMatrix::symmetrize(midpoint_sum / static_cast<double>(n)));
  terms.push_back(segment_integral(f, a, b, opt.quad));
  terms.push_back(HermitianMatrix::symmetrize(trapezoid_sum / (2.0 * n)));
  terms.push_back(0.5 * (at_grid[n] + at_grid[0]));

  RefinementChainReport r;
  r.k = k;
  r.p = p;
  r.outer = loewner_leq(terms.front(), terms.back(), opt.tol);
  r.chain = loewner_chain({"L0", "L1", "L2", "L3", "L4"}, std::move(terms), opt.tol);
  r.holds = r.chain.holds && r.outer.holds;
  return r;
}

CounterexampleReport reproduce_counterexample() {
  using exact::Rational;
  using exact::RationalMatrix;
  CounterexampleReport r;
  r.a = RationalMatrix{{2, 1}, {1, 1}};
  r.b = RationalMatrix{{1, 0}, {0, 0}};
  const Rational half(1, 2);
  const RationalMatrix id = RationalMatrix::identity(2);

  const RationalMatrix mean = half * (r.a + r.b);
  r.left = mean * mean * mean;
  r.middle = exact::word_expansion_integral<RationalMatrix>(3, r.a, r.b, id, exact::beta_weight);
  r.right = half * (r.a * r.a * r.a + r.b * r.b * r.b);

  const RationalMatrix reference_left{{Rational(17, 4), Rational(7, 4)}, {Rational(7, 4), Rational(3, 4)}};
  const RationalMatrix reference_middle{{Rational(31, 6), Rational(5, 2)}, {Rational(5, 2), Rational(4, 3)}};
  const RationalMatrix reference_right{{7, 4}, {4, Rational(5, 2)}};
  r.left_matches = r.left == reference_left;
  r.middle_matches = r.middle == reference_middle;
  r.right_matches = r.right == reference_right;

  r.left_gap = r.middle - r.left;
  r.right_gap = r.right - r.middle;
  r.left_gap_det = exact::determinant(r.left_gap);
  r.right_gap_det = exact::determinant(r.right_gap);
  r.left_inequality_fails = exact::negative_leading_minor(r.left_gap).has_value();
  r.right_inequality_fails = exact::negative_leading_minor(r.right_gap).has_value();

  const HermitianMatrix quad = segment_integral(builtin("cube"), r.a.to_hermitian(), r.b.to_hermitian());
  r.quadrature_deviation = (quad.matrix() - r.middle.to_hermitian().matrix()).cwiseAbs().maxCoeff();
  return r;
}

}  // namespace hhmat
