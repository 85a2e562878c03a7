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

#include <cmath>
#include <numbers>

#include "helpers.hpp"
#include "hhmat/harness.hpp"
#include "hhmat/hhcheck.hpp"
#include "hhmat/random.hpp"

using namespace hhmat;
using hhmat::test::max_abs_diff;
using exact::Rational;
using exact::RationalMatrix;

namespace {

const HermitianMatrix kA = HermitianMatrix::real({{2, 1}, {1, 1}});
const HermitianMatrix kB = HermitianMatrix::real({{1, 0}, {0, 0}});
constexpr double kE = std::numbers::e;

ErrorCode code_of(auto&& fn) {
  try {
    fn();
  } catch (const Error& e) {
    return e.code();
  }
  FAIL("no error thrown");
  return ErrorCode::BadInput;
}

double scalar(const HermitianMatrix& h) { return h(0, 0).real(); }

HermitianMatrix diag(double a, double b) { return HermitianMatrix::diagonal(std::vector<double>{a, b}); }

CVector e1(int n) {
  CVector v = CVector::Zero(n);
  v(0) = 1;
  return v;
}

PositiveLinearMap halved() {
  return PositiveLinearMap::congruence_sum({Matrix::Identity(2, 2) / std::sqrt(2.0)});
}

}  // namespace

TEST_CASE("scalar Hermite–Hadamard examples") {
  const ChainReport id = check_scalar_hh(builtin("identity"), 0, 1);
  CHECK(id.holds);
  for (const auto& t : id.terms) CHECK(scalar(t) == doctest::Approx(0.5).epsilon(1e-15));

  const ChainReport sq = check_scalar_hh(builtin("power", {2}), 0, 1);
  CHECK(sq.holds);
  CHECK(std::abs(scalar(sq.terms[0]) - 0.25) < 1e-15);
  CHECK(std::abs(scalar(sq.terms[1]) - 1.0 / 3) < 1e-15);
  CHECK(std::abs(scalar(sq.terms[2]) - 0.5) < 1e-15);

  const ChainReport ex = check_scalar_hh(builtin("exp"), 0, 1);
  CHECK(ex.holds);
  CHECK(std::abs(scalar(ex.terms[0]) - std::sqrt(kE)) < 1e-14);
  CHECK(std::abs(scalar(ex.terms[1]) - (kE - 1)) < 1e-14);
  CHECK(std::abs(scalar(ex.terms[2]) - (1 + kE) / 2) < 1e-14);
  CHECK(ex.links.size() == 2);

  CHECK(code_of([] { check_scalar_hh(builtin("exp"), 1, 0); }) == ErrorCode::BadParams);
  CHECK(code_of([] { check_scalar_hh(builtin("inverse"), -1, 1); }) == ErrorCode::SpectrumOutOfDomain);
  FunctionFlags none{};
  const ScalarFunction sine("sine", [](long double x) { return std::sin(x); }, Interval::real_line(), none);
  CHECK(code_of([&] { check_scalar_hh(sine, 0, 1); }) == ErrorCode::NotConvexFlag);
}

TEST_CASE("Jensen-type inequality for positive maps") {
  const JensenReport eq = check_jensen_map(builtin("power", {2}), PositiveLinearMap::identity(2), diag(1, 2), e1(2));
  CHECK(eq.lhs == doctest::Approx(1));
  CHECK(eq.rhs == doctest::Approx(1));
  CHECK(eq.verdict.holds);

  const JensenReport strict = check_jensen_map(builtin("power", {2}), PositiveLinearMap::identity(2),
                                               HermitianMatrix::real({{1, 1}, {1, 1}}), e1(2));
  CHECK(strict.lhs == doctest::Approx(1));
  CHECK(strict.rhs == doctest::Approx(2));
  CHECK(strict.verdict.holds);

  Rng rng(31);
  for (int trial = 0; trial < 100; ++trial) {
    const HermitianMatrix a = random_hermitian(4, Interval::closed(-3, 3), rng);
    const PositiveLinearMap phi = make_map("random", 4, 3, rng);
    const CVector x = random_unit_vector(phi.target_dim(), rng);
    const JensenReport r = check_jensen_map(builtin("identity"), phi, a, x);
    REQUIRE(std::abs(r.lhs - r.rhs) < 1e-12 * unit_scale(std::abs(r.rhs)));
  }

  // Case (ii): subunital map, short vector, f(0) <= 0.
  const JensenReport sub =
      check_jensen_map(builtin("power", {2}), halved(), diag(1, 2), 0.5 * e1(2));
  CHECK(sub.hypothesis == MapHypothesis::Subunital);
  CHECK(sub.verdict.holds);

  // exp(0) = 1 > 0: no case applies to a subunital map.
  CHECK(code_of([] { check_jensen_map(builtin("exp"), halved(), diag(1, 2), e1(2)); }) ==
        ErrorCode::HypothesisUnmet);
  // Unital map but ||x|| != 1 and f(0) > 0.
  CHECK(code_of([] {
          check_jensen_map(builtin("exp"), PositiveLinearMap::identity(2), diag(1, 2), 0.5 * e1(2));
        }) == ErrorCode::HypothesisUnmet);
}

TEST_CASE("majorization theorem examples") {
  Rng rng(32);
  const HermitianMatrix a = random_hermitian(3, Interval::closed(-1, 1), rng);
  const HermitianMatrix b = random_hermitian(3, Interval::closed(-1, 1), rng);
  const MajorizationCheck id = check_theorem_t1(builtin("identity"), PositiveLinearMap::identity(3), a, b);
  CHECK(id.report.holds);
  CHECK(max_abs_diff(id.lhs, 0.5 * (a + b)) < 1e-14);
  CHECK(id.report.deficits.cwiseAbs().maxCoeff() < 1e-13);

  const MajorizationCheck cube = check_theorem_t1(builtin("cube"), PositiveLinearMap::identity(2), kA, kB);
  CHECK(cube.report.holds);
  CHECK(max_abs_diff(cube.lhs, HermitianMatrix::real({{17.0 / 4, 7.0 / 4}, {7.0 / 4, 3.0 / 4}})) < 1e-13);
  CHECK(max_abs_diff(cube.rhs, HermitianMatrix::real({{31.0 / 6, 5.0 / 2}, {5.0 / 2, 4.0 / 3}})) < 1e-12);

  const PositiveLinearMap phi = make_map("random-congruence", 3, 2, rng);
  const HermitianMatrix p = random_hermitian(3, Interval::closed(0, 2), rng);
  const MajorizationCheck collapse = check_theorem_t1(builtin("power", {2}), phi, p, p);
  CHECK(collapse.report.holds);
  CHECK(max_abs_diff(collapse.rhs, apply_map(phi, apply_function(builtin("power", {2}), p))) < 1e-12);
  const MajorizationCheck same = check_theorem_t1(builtin("exp"), PositiveLinearMap::identity(3), p, p);
  CHECK(same.report.deficits.cwiseAbs().maxCoeff() < 1e-10);

  CHECK(code_of([&] { check_theorem_t1(builtin("exp"), halved(), kA, kB); }) == ErrorCode::HypothesisUnmet);
  CHECK(check_theorem_t1(builtin("power", {2}), halved(), kA, kB).hypothesis == MapHypothesis::Subunital);
  Matrix rank_one = Matrix::Zero(2, 2);
  rank_one(0, 0) = 1;
  CHECK(code_of([&] {
          check_theorem_t1(builtin("power", {2}), PositiveLinearMap::congruence_sum({rank_one}), kA, kB);
        }) == ErrorCode::HypothesisUnmet);
}

TEST_CASE("trace corollary") {
  const TraceReport cube = check_trace_corollary(builtin("cube"), kA, kB);
  CHECK(std::abs(cube.lhs - 5.0) < 1e-13);
  CHECK(std::abs(cube.rhs - 6.5) < 1e-12);
  CHECK(cube.verdict.holds);
  const TraceReport id = check_trace_corollary(builtin("identity"), kA, kB);
  CHECK(std::abs(id.lhs - id.rhs) < 1e-14);
  const TraceReport same = check_trace_corollary(builtin("exp"), kA, kA);
  CHECK(std::abs(same.lhs - same.rhs) < 1e-12);
}

TEST_CASE("power norm corollary") {
  const HermitianMatrix id = HermitianMatrix::identity(2);
  std::vector<NormSpec> specs{NormSpec::ky_fan(1), NormSpec::ky_fan(2), NormSpec::schatten(1), NormSpec::schatten(2),
                              NormSpec::op()};
  const NormComparisonReport trivial = check_power_norm_corollary(2, PositiveLinearMap::identity(2), id, id, specs);
  CHECK(trivial.holds);
  for (const auto& c : trivial.comparisons) CHECK(std::abs(c.lhs - c.rhs) < 1e-13);

  const NormComparisonReport cex = check_power_norm_corollary(3, PositiveLinearMap::identity(2), kA, kB,
                                                              {NormSpec::ky_fan(1), NormSpec::ky_fan(2)});
  CHECK(cex.holds);
  // Ky Fan 2 is the trace for PSD matrices.
  CHECK(cex.comparisons[1].lhs == doctest::Approx(5.0));
  CHECK(cex.comparisons[1].rhs == doctest::Approx(6.5));

  Rng rng(33);
  for (int trial = 0; trial < 100; ++trial) {
    const int n = 2 + trial % 4;
    const int m = 1 + trial % n;
    const HermitianMatrix a = random_psd(n, 2.0, rng);
    const HermitianMatrix b = random_psd(n, 2.0, rng);
    std::vector<NormSpec> s{NormSpec::schatten(1), NormSpec::schatten(2)};
    for (int k = 1; k <= m; ++k) s.push_back(NormSpec::ky_fan(k));
    REQUIRE(check_power_norm_corollary(2, PositiveLinearMap::compress_leading(n, m), a, b, s).holds);
  }

  CHECK(code_of([&] { check_power_norm_corollary(2, PositiveLinearMap::identity(2), diag(-1, 1), kB, specs); }) ==
        ErrorCode::NotPSD);
  CHECK(code_of([&] { check_power_norm_corollary(1, PositiveLinearMap::identity(2), kA, kB, specs); }) ==
        ErrorCode::BadParams);
}

TEST_CASE("Bourin-type dominance") {
  Rng rng(34);
  const HermitianMatrix a = random_hermitian(3, Interval::closed(0, 2), rng);
  const BourinReport one = check_bourin_t2(builtin("exp"), {PositiveLinearMap::identity(3)}, {a});
  CHECK(one.holds);
  CHECK(max_abs_diff(one.lhs, one.rhs) < 1e-13);
  CHECK(std::abs(one.dominance.margin) < 1e-12);

  const BourinReport ex = check_bourin_t2(builtin("exp"), {halved(), halved()}, {diag(0, 2), diag(2, 0)});
  CHECK(ex.holds);
  CHECK(max_abs_diff(ex.lhs, kE * HermitianMatrix::identity(2)) < 1e-13);
  CHECK(max_abs_diff(ex.rhs, (1 + kE * kE) / 2 * HermitianMatrix::identity(2)) < 1e-13);
  CHECK(ex.witness_unitary);
  REQUIRE(ex.witness_check);
  CHECK(ex.witness_check->holds);

  for (int trial = 0; trial < 100; ++trial) {
    const int n = 1 + trial % 4;
    const int m = 1 + trial % 3;
    const int k = 1 + trial % 3;
    const Matrix w = random_isometry(k * n, m, rng);
    std::vector<PositiveLinearMap> maps;
    std::vector<HermitianMatrix> as;
    for (int i = 0; i < k; ++i) {
      maps.push_back(PositiveLinearMap::congruence_sum({w.middleRows(i * n, n)}));
      as.push_back(random_psd(n, 2.0, rng));
    }
    const ScalarFunction f = trial % 2 ? builtin("exp") : builtin("power", {2});
    const BourinReport r = check_bourin_t2(f, maps, as);
    REQUIRE(r.holds);
    REQUIRE(r.witness);
    REQUIRE(is_unitary(*r.witness, 1e-9));
  }

  CHECK(code_of([] { check_bourin_t2(builtin("neg_sqrt"), {PositiveLinearMap::identity(2)}, {kA}); }) ==
        ErrorCode::HypothesisUnmet);
  CHECK(code_of([] {
          check_bourin_t2(builtin("exp"), {PositiveLinearMap::identity(2), PositiveLinearMap::identity(2)}, {kA, kB});
        }) == ErrorCode::HypothesisUnmet);
  CHECK(code_of([] { check_bourin_t2(builtin("exp"), {PositiveLinearMap::identity(2)}, {}); }) ==
        ErrorCode::BadParams);
}

TEST_CASE("conditional eigenvalue dominance with a supplied unitary") {
  const Matrix id2 = Matrix::Identity(2, 2);
  const ConditionalChainReport diagonal = check_theorem_t3(builtin("exp"), PositiveLinearMap::identity(2),
                                                           diag(0, 1.5), diag(2, 0.5), id2, default_t_grid());
  CHECK(diagonal.hypothesis.size() == 33);
  CHECK(diagonal.dominance.holds);
  CHECK(diagonal.conclusion.holds);

  Rng rng(35);
  for (int trial = 0; trial < 30; ++trial) {
    const PositiveLinearMap phi = make_map("random", 3, 2, rng);
    const HermitianMatrix a = random_hermitian(3, Interval::closed(0, 2), rng);
    const ScalarFunction f = builtin("power", {2});
    try {
      const Matrix u = Matrix::Identity(phi.target_dim(), phi.target_dim());
      const ConditionalChainReport r = check_theorem_t3(f, phi, a, a, u, default_t_grid());
      const BourinReport b = check_bourin_t2(f, {phi}, {a});
      REQUIRE(r.dominance.holds == b.dominance.holds);
      REQUIRE(max_abs_diff(r.conclusion.terms[0], b.lhs) < 1e-10);
    } catch (const Error& e) {
      // f(Phi(A)) <= Phi(f(A)) fails for U = I only outside the Loewner order.
      REQUIRE(e.code() == ErrorCode::HypothesisUnmet);
      REQUIRE_FALSE(loewner_leq(apply_function(f, apply_map(phi, a)), apply_map(phi, apply_function(f, a))).holds);
    }
  }

  const HermitianMatrix a = random_hermitian(3, Interval::closed(-1, 1), rng);
  const HermitianMatrix b = random_hermitian(3, Interval::closed(-1, 1), rng);
  const ConditionalChainReport lin = check_theorem_t3(builtin("identity"), PositiveLinearMap::identity(3), a, b,
                                                      Matrix::Identity(3, 3), default_t_grid());
  CHECK(max_abs_diff(lin.conclusion.terms[0], lin.conclusion.terms[1]) < 1e-13);

  CHECK(code_of([] {
          check_theorem_t3(builtin("exp"), PositiveLinearMap::identity(2), kA, kB, 2.0 * Matrix::Identity(2, 2),
                           default_t_grid());
        }) == ErrorCode::NotUnitary);
  // The cube is not operator convex; on this pair the U = I hypothesis fails on the grid.
  try {
    check_theorem_t3(builtin("cube"), PositiveLinearMap::identity(2), kA, kB, id2, default_t_grid());
    FAIL("hypothesis accepted");
  } catch (const Error& e) {
    CHECK(e.code() == ErrorCode::HypothesisUnmet);
    CHECK(std::string(e.what()).find("t = ") != std::string::npos);
  }
}

TEST_CASE("converse constant") {
  const AlphaResult id = mond_pecaric_alpha(builtin("identity"), 1, 2);
  CHECK(std::abs(id.alpha - 1.0) < 1e-12);
  const AlphaResult sq = mond_pecaric_alpha(builtin("power", {2}), 1, 2);
  CHECK(std::abs(sq.alpha - 9.0 / 8) < 1e-12);
  CHECK(std::abs(sq.argmax_t - 4.0 / 3) < 1e-8);
  const AlphaResult ex = mond_pecaric_alpha(builtin("exp"), 0, 1);
  const double expected = (kE - 1) * std::exp(-(kE - 2) / (kE - 1));
  CHECK(std::abs(ex.alpha - expected) < 1e-12);
  CHECK(ex.alpha == doctest::Approx(1.1313).epsilon(1e-4));
  CHECK(std::abs(mond_pecaric_alpha(builtin("affine", {2, 1}), 0, 5).alpha - 1.0) < 1e-12);

  CHECK(code_of([] { mond_pecaric_alpha(builtin("exp"), 2, 1); }) == ErrorCode::BadInterval);
  CHECK(code_of([] { mond_pecaric_alpha(builtin("identity"), -1, 1); }) == ErrorCode::NotPositive);
  CHECK(code_of([] { mond_pecaric_alpha(builtin("inverse"), -1, 1); }) == ErrorCode::BadInterval);
}

TEST_CASE("converse Loewner bound") {
  const Interval iv = Interval::closed(1, 2);
  const HermitianMatrix a = HermitianMatrix::real({{1.5, 0.2}, {0.2, 1.3}});
  const HermitianMatrix b = HermitianMatrix::real({{1.2, -0.1}, {-0.1, 1.8}});
  const MondPecaricReport id = check_theorem_t4(builtin("identity"), PositiveLinearMap::identity(2), a, b, iv);
  CHECK(std::abs(id.alpha.alpha - 1) < 1e-12);
  CHECK(max_abs_diff(id.lhs, id.rhs) < 1e-12);
  CHECK(id.verdict.holds);

  Rng rng(36);
  for (int trial = 0; trial < 100; ++trial) {
    const int n = 1 + trial % 5;
    const HermitianMatrix x = random_hermitian(n, iv, rng);
    const HermitianMatrix y = trial % 3 == 0 ? x : random_hermitian(n, iv, rng);
    const PositiveLinearMap phi = make_map("random", n, 1 + trial % n, rng);
    const MondPecaricReport r = check_theorem_t4(builtin("power", {2}), phi, x, y, iv);
    REQUIRE(r.verdict.holds);
    REQUIRE(std::abs(r.alpha.alpha - 9.0 / 8) < 1e-12);
  }

  // The scale factor alone breaks the bound for subunital maps: t^2 on [1, 2],
  // A = B = 2I, Phi(X) = X/2 gives 2I on the left and (9/8) I on the right.
  CHECK(code_of([&] {
          check_theorem_t4(builtin("power", {2}), halved(), 2.0 * HermitianMatrix::identity(2),
                           2.0 * HermitianMatrix::identity(2), iv);
        }) == ErrorCode::HypothesisUnmet);
  CHECK(code_of([&] { check_theorem_t4(builtin("power", {2}), PositiveLinearMap::identity(2), kA, kB, iv); }) ==
        ErrorCode::HypothesisUnmet);
  CHECK(code_of([&] {
          check_theorem_t4(builtin("identity"), PositiveLinearMap::identity(2), a, b, Interval::closed(-1, 2));
        }) == ErrorCode::HypothesisUnmet);
}

TEST_CASE("norm chain corollary") {
  const Interval iv = Interval::closed(1, 2);
  const std::vector<NormSpec> specs{NormSpec::ky_fan(1), NormSpec::ky_fan(2), NormSpec::schatten(1),
                                    NormSpec::schatten(2), NormSpec::op()};
  const HermitianMatrix a = HermitianMatrix::real({{1.5, 0.2}, {0.2, 1.3}});
  const HermitianMatrix b = HermitianMatrix::real({{1.2, -0.1}, {-0.1, 1.8}});
  const NormChainReport id = check_norm_chain_corollary(builtin("identity"), PositiveLinearMap::identity(2), a, b,
                                                        iv, specs);
  CHECK(id.holds);
  CHECK(id.first_checked());
  CHECK(id.second_checked());
  REQUIRE(id.alpha);
  CHECK(std::abs(id.alpha->alpha - 1) < 1e-12);
  for (const auto& c : id.first) CHECK(std::abs(c.lhs - c.rhs) < 1e-12);
  for (const auto& c : id.second) CHECK(std::abs(c.lhs - c.rhs) < 1e-12);

  Rng rng(37);
  for (int trial = 0; trial < 100; ++trial) {
    const int n = 1 + trial % 4;
    const HermitianMatrix x = random_hermitian(n, iv, rng);
    const HermitianMatrix y = random_hermitian(n, iv, rng);
    std::vector<NormSpec> s{NormSpec::schatten(1), NormSpec::schatten(2), NormSpec::op()};
    for (int k = 1; k <= n; ++k) s.push_back(NormSpec::ky_fan(k));
    const NormChainReport plain = check_norm_chain_corollary(builtin("power", {2}), PositiveLinearMap::identity(n),
                                                             x, y, iv, s);
    REQUIRE(plain.holds);
    REQUIRE(plain.second_checked());
    const PositiveLinearMap phi = make_map("random-congruence", n, n, rng);
    REQUIRE(check_norm_chain_corollary(builtin("power", {2}), phi, x, y, iv, s).holds);
  }

  // Subunital with f(0) = 0: first link only.
  const NormChainReport sub = check_norm_chain_corollary(builtin("power", {2}), halved(), a, b,
                                                         Interval::closed(0, 2), specs);
  CHECK(sub.first_checked());
  CHECK_FALSE(sub.second_checked());
  CHECK(sub.holds);
  CHECK(code_of([&] { check_norm_chain_corollary(builtin("exp"), halved(), a, b, Interval::closed(0, 2), specs); }) ==
        ErrorCode::HypothesisUnmet);

  // neg_sqrt is negative on [1, 2]: both links skipped.
  const NormChainReport neg = check_norm_chain_corollary(builtin("neg_sqrt"), PositiveLinearMap::identity(2), a, b,
                                                         iv, specs);
  CHECK_FALSE(neg.first_checked());
  CHECK_FALSE(neg.second_checked());
}

TEST_CASE("refinement chain examples") {
  Rng rng(38);
  const HermitianMatrix a = random_hermitian(3, Interval::closed(-2, 2), rng);
  const HermitianMatrix b = random_hermitian(3, Interval::closed(-2, 2), rng);
  const RefinementChainReport lin = check_refinement_chain(builtin("identity"), a, b, 3, 2);
  CHECK(lin.holds);
  for (const auto& t : lin.chain.terms) CHECK(max_abs_diff(t, 0.5 * (a + b)) < 1e-12);

  const RefinementChainReport sq = check_refinement_chain(builtin("power", {2}), diag(0, 2), diag(2, 0), 2, 1);
  CHECK(sq.holds);
  const double expected[] = {1.0, 1.25, 4.0 / 3, 1.5, 2.0};
  for (int i = 0; i < 5; ++i) {
    CAPTURE(i);
    CHECK(max_abs_diff(sq.chain.terms[i], expected[i] * HermitianMatrix::identity(2)) < 1e-13);
  }
  CHECK(sq.chain.labels == std::vector<std::string>{"L0", "L1", "L2", "L3", "L4"});
  CHECK(sq.outer.holds);

  for (int trial = 0; trial < 20; ++trial) {
    const HermitianMatrix x = random_hermitian(3, Interval::closed(0.5, 4), rng);
    const HermitianMatrix y = random_hermitian(3, Interval::closed(0.5, 4), rng);
    const RefinementChainReport r = check_refinement_chain(builtin("inverse"), x, y, 3, 2);
    REQUIRE(r.holds);
    REQUIRE(r.chain.links.size() == 4);
  }

  CHECK(code_of([] { check_refinement_chain(builtin("cube"), kA, kB, 2, 1); }) ==
        ErrorCode::NotOperatorConvexFlag);
  CHECK(code_of([] { check_refinement_chain(builtin("power", {2}), kA, kB, 0, 1); }) == ErrorCode::BadParams);
  CHECK(code_of([] { check_refinement_chain(builtin("power", {2}), kA, kB, 3, 9); }) == ErrorCode::BadParams);
}

TEST_CASE("counterexample is reproduced exactly") {
  const CounterexampleReport r = reproduce_counterexample();
  CHECK(r.left == RationalMatrix{{Rational(17, 4), Rational(7, 4)}, {Rational(7, 4), Rational(3, 4)}});
  CHECK(r.middle == RationalMatrix{{Rational(31, 6), Rational(5, 2)}, {Rational(5, 2), Rational(4, 3)}});
  CHECK(r.right == RationalMatrix{{Rational(7), Rational(4)}, {Rational(4), Rational(5, 2)}});
  CHECK(r.left_gap == RationalMatrix{{Rational(11, 12), Rational(3, 4)}, {Rational(3, 4), Rational(7, 12)}});
  CHECK(r.right_gap == RationalMatrix{{Rational(11, 6), Rational(3, 2)}, {Rational(3, 2), Rational(7, 6)}});
  CHECK(r.left_gap_det == Rational(-1, 36));
  CHECK(r.right_gap_det == Rational(-1, 9));
  CHECK(r.left_inequality_fails);
  CHECK(r.right_inequality_fails);
  CHECK(r.holds());
  CHECK(r.quadrature_deviation < 1e-13);
}

TEST_CASE("1x1 inputs agree with the scalar inequality") {
  Rng rng(39);
  const char* names[] = {"identity", "power:2", "power:4", "exp", "cube", "xlogx", "neg_sqrt", "inverse"};
  for (int trial = 0; trial < 200; ++trial) {
    const ScalarFunction f = parse_function(names[trial % 8]);
    CAPTURE(f.name());
    double x = rng.uniform(0.2, 3);
    double y = rng.uniform(0.2, 3);
    if (x > y) std::swap(x, y);
    if (y - x < 1e-3) continue;
    const ChainReport s = check_scalar_hh(f, x, y);
    const double w = y - x;
    const double mid = scalar(s.terms[0]) / w;
    const double integral = scalar(s.terms[1]) / w;
    const double trap = scalar(s.terms[2]) / w;
    auto close = [](double u, double v) { return std::abs(u - v) <= 1e-12 * unit_scale(std::abs(v)); };
    const HermitianMatrix a = HermitianMatrix::diagonal(std::vector<double>{x});
    const HermitianMatrix b = HermitianMatrix::diagonal(std::vector<double>{y});

    const MajorizationCheck t1 = check_theorem_t1(f, PositiveLinearMap::identity(1), a, b);
    REQUIRE(close(scalar(t1.lhs), mid));
    REQUIRE(close(scalar(t1.rhs), integral));
    REQUIRE(t1.report.holds == s.links[0].holds());

    const TraceReport tr = check_trace_corollary(f, a, b);
    REQUIRE(close(tr.lhs, mid));
    REQUIRE(close(tr.rhs, integral));

    if (f.flags().operator_convex == Flag::True) {
      const RefinementChainReport rc = check_refinement_chain(f, a, b, 1, 1);
      REQUIRE(close(scalar(rc.chain.terms[0]), mid));
      REQUIRE(close(scalar(rc.chain.terms[2]), integral));
      REQUIRE(close(scalar(rc.chain.terms[4]), trap));
    }
    if (f.flags().increasing == Flag::True) {
      const ConditionalChainReport t3 =
          check_theorem_t3(f, PositiveLinearMap::identity(1), a, b, Matrix::Identity(1, 1), default_t_grid());
      REQUIRE(close(scalar(t3.conclusion.terms[0]), integral));
      REQUIRE(close(scalar(t3.conclusion.terms[1]), trap));
    }
    if (f.flags().positive == Flag::True) {
      const MondPecaricReport t4 = check_theorem_t4(f, PositiveLinearMap::identity(1), a, b, Interval::closed(x, y));
      REQUIRE(close(scalar(t4.lhs), integral));
    }
  }
}
