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

#include <optional>
#include <string>
#include <variant>
#include <vector>

#include "hhmat/exact.hpp"
#include "hhmat/funcat.hpp"
#include "hhmat/matcore.hpp"
#include "hhmat/orders.hpp"
#include "hhmat/plmaps.hpp"
#include "hhmat/segquad.hpp"

namespace hhmat {

/// Every checker validates its hypotheses first and throws
/// Error(HypothesisUnmet) (or the flag-specific code) when they fail. A
/// returned report with holds == false is an inequality violation.
struct CheckOptions {
  double tol = kDefaultTol;
  QuadratureSpec quad{};
};

struct ChainLink {
  std::string from;
  std::string to;
  std::variant<OrderVerdict, MajorizationReport> result;

  bool holds() const;
  double normalized_margin() const;
};

struct ChainReport {
  std::vector<std::string> labels;
  std::vector<HermitianMatrix> terms;
  std::vector<ChainLink> links;
  bool holds = false;

  double worst_margin() const;
};

/// Builds the report with a Loewner link between each adjacent pair.
ChainReport loewner_chain(std::vector<std::string> labels, std::vector<HermitianMatrix> terms,
                          double tol);

/// (y-x) f((x+y)/2) <= int_x^y f <= (y-x)(f(x)+f(y))/2, terms held as 1×1.
ChainReport check_scalar_hh(const ScalarFunction& f, double x, double y,
                            const CheckOptions& opt = {});

enum class MapHypothesis { Unital, Subunital };
std::string_view to_string(MapHypothesis h);

struct JensenReport {
  double lhs = 0.0;  // f(<Phi(A)x, x>)
  double rhs = 0.0;  // <Phi(f(A))x, x>
  MapHypothesis hypothesis = MapHypothesis::Unital;
  OrderVerdict verdict;
};

JensenReport check_jensen_map(const ScalarFunction& f, const PositiveLinearMap& phi,
                              const HermitianMatrix& a, const CVector& x, const CheckOptions& opt = {});

struct MajorizationCheck {
  HermitianMatrix lhs;
  HermitianMatrix rhs;
  MapHypothesis hypothesis = MapHypothesis::Unital;
  MajorizationReport report;
};

/// lambda(f((Phi(A)+Phi(B))/2)) weakly majorized by lambda(Phi(int_0^1 f(tA+(1-t)B) dt)).
MajorizationCheck check_theorem_t1(const ScalarFunction& f, const PositiveLinearMap& phi,
                                   const HermitianMatrix& a, const HermitianMatrix& b,
                                   const CheckOptions& opt = {});

struct TraceReport {
  double lhs = 0.0;
  double rhs = 0.0;
  OrderVerdict verdict;
};

/// Tr f((A+B)/2) <= Tr int_0^1 f(tA+(1-t)B) dt.
TraceReport check_trace_corollary(const ScalarFunction& f, const HermitianMatrix& a,
                                  const HermitianMatrix& b, const CheckOptions& opt = {});

struct NormComparison {
  NormSpec spec;
  double lhs = 0.0;
  double rhs = 0.0;
  bool holds = false;
  double normalized_margin() const;
};

struct NormComparisonReport {
  std::vector<NormComparison> comparisons;
  MapHypothesis hypothesis = MapHypothesis::Unital;
  bool holds = false;
  double worst_margin() const;
};

/// Every NormSpec: ||((Phi(A)+Phi(B))/2)^r|| <= ||int_0^1 Phi((tA+(1-t)B)^r) dt||
/// for PSD A, B. Throws NotPSD.
NormComparisonReport check_power_norm_corollary(double r, const PositiveLinearMap& phi,
                                                const HermitianMatrix& a, const HermitianMatrix& b,
                                                const std::vector<NormSpec>& specs,
                                                const CheckOptions& opt = {});

struct BourinReport {
  HermitianMatrix lhs;  // f(sum_i Phi_i(A_i))
  HermitianMatrix rhs;  // sum_i Phi_i(f(A_i))
  MapHypothesis hypothesis = MapHypothesis::Unital;
  OrderVerdict dominance;
  /// U with lhs <= U* rhs U, when dominance holds.
  std::optional<Matrix> witness;
  std::optional<OrderVerdict> witness_check;
  bool witness_unitary = false;
  bool holds = false;
};

/// f(sum_i Phi_i(A_i)) <= U (sum_i Phi_i(f(A_i))) U* for some unitary U, with the
/// unitary constructed from the eigenvector frames.
BourinReport check_bourin_t2(const ScalarFunction& f, const std::vector<PositiveLinearMap>& maps,
                             const std::vector<HermitianMatrix>& a_list, const CheckOptions& opt = {});

/// 33 equispaced points of [0, 1].
std::vector<double> default_t_grid(int points = 33);

struct ConditionalChainReport {
  /// Hypothesis verdict at each grid point, all holding when returned.
  std::vector<double> t_grid;
  std::vector<OrderVerdict> hypothesis;
  MapHypothesis map_hypothesis = MapHypothesis::Unital;
  /// terms: int_0^1 f(Phi(tA+(1-t)B)) dt, (Phi(f(A))+Phi(f(B)))/2;
  /// the single link is eigenvalue dominance.
  ChainReport conclusion;
  OrderVerdict dominance;
};

/// Checks the supplied-U hypothesis on t_grid (HypothesisUnmet naming the first
/// failing t), then the eigenvalue-dominance conclusion. Throws NotUnitary.
ConditionalChainReport check_theorem_t3(const ScalarFunction& f, const PositiveLinearMap& phi,
                                        const HermitianMatrix& a, const HermitianMatrix& b,
                                        const Matrix& u, const std::vector<double>& t_grid,
                                        const CheckOptions& opt = {});

struct AlphaResult {
  double alpha = 1.0;
  double argmax_t = 0.0;
  double omega = 0.0;
  double Omega = 0.0;
};

inline constexpr int kAlphaGridPoints = 10000;

/// max over [omega, Omega] of ((Omega-t) f(omega) + (t-omega) f(Omega)) / ((Omega-omega) f(t)),
/// grid scan then golden-section refinement. Throws NotPositive, BadInterval.
AlphaResult mond_pecaric_alpha(const ScalarFunction& f, double omega, double Omega);

struct MondPecaricReport {
  HermitianMatrix lhs;  // Phi(int_0^1 f(tA+(1-t)B) dt)
  HermitianMatrix rhs;  // alpha (f(Phi(A)) + f(Phi(B)))/2
  AlphaResult alpha;
  OrderVerdict verdict;
};

/// Loewner form of the converse bound. Requires spectra of A, B in
/// `interval`, f convex and positive there, and Phi unital.
MondPecaricReport check_theorem_t4(const ScalarFunction& f, const PositiveLinearMap& phi,
                                   const HermitianMatrix& a, const HermitianMatrix& b,
                                   const Interval& interval, const CheckOptions& opt = {});

struct NormChainReport {
  std::vector<NormSpec> specs;
  MapHypothesis hypothesis = MapHypothesis::Unital;
  std::optional<AlphaResult> alpha;
  /// ||f((Phi(A)+Phi(B))/2)|| <= ||Phi(int)||, empty when skipped.
  std::vector<NormComparison> first;
  /// ||Phi(int)|| <= alpha ||(f(Phi(A))+f(Phi(B)))/2||, empty when skipped.
  std::vector<NormComparison> second;
  std::string first_skip_reason;
  std::string second_skip_reason;
  bool holds = false;

  bool first_checked() const { return first_skip_reason.empty(); }
  bool second_checked() const { return second_skip_reason.empty(); }
  double worst_margin() const;
};

/// Both norm links. A link whose matrices are not all PSD is skipped (norm
/// monotonicity is only read off the order for PSD matrices); the second link
/// also needs f > 0 on `interval` and a unital Phi.
NormChainReport check_norm_chain_corollary(const ScalarFunction& f, const PositiveLinearMap& phi,
                                           const HermitianMatrix& a, const HermitianMatrix& b,
                                           const Interval& interval, const std::vector<NormSpec>& specs,
                                           const CheckOptions& opt = {});

struct RefinementChainReport {
  int k = 1;
  int p = 1;
  /// L0 f((A+B)/2), L1 midpoint sum, L2 integral, L3 trapezoid sum, L4 (f(A)+f(B))/2.
  ChainReport chain;
  /// L0 <= L4 checked directly.
  OrderVerdict outer;
  bool holds = false;
};

/// Five-term refinement chain on the uniform partition into k^p pieces.
/// Throws NotOperatorConvexFlag.
RefinementChainReport check_refinement_chain(const ScalarFunction& f, const HermitianMatrix& a,
                                             const HermitianMatrix& b, int k, int p,
                                             const CheckOptions& opt = {});

struct CounterexampleReport {
  exact::RationalMatrix a;
  exact::RationalMatrix b;
  exact::RationalMatrix left;    // ((A+B)/2)^3
  exact::RationalMatrix middle;  // int_0^1 (tA+(1-t)B)^3 dt
  exact::RationalMatrix right;   // (A^3+B^3)/2
  bool left_matches = false;
  bool middle_matches = false;
  bool right_matches = false;
  exact::RationalMatrix left_gap;   // middle - left
  exact::RationalMatrix right_gap;  // right - middle
  exact::Rational left_gap_det;
  exact::Rational right_gap_det;
  /// Certified by a negative leading principal minor.
  bool left_inequality_fails = false;
  bool right_inequality_fails = false;
  /// Floating-point cross-check of the middle term by quadrature.
  double quadrature_deviation = 0.0;

  bool holds() const {
    return left_matches && middle_matches && right_matches && left_inequality_fails &&
           right_inequality_fails;
  }
};

/// Exact rational recomputation of the t^3 instance on A = [[2,1],[1,1]],
/// B = [[1,0],[0,0]], compared against the reference literals, with both
/// Loewner inequalities of the naive matrix double inequality certified false.
CounterexampleReport reproduce_counterexample();

}  // namespace hhmat
