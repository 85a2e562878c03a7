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

#include "helpers.hpp"
#include "hhmat/orders.hpp"
#include "hhmat/random.hpp"

using namespace hhmat;

namespace {

HermitianMatrix diag(std::vector<double> d) { return HermitianMatrix::diagonal(d); }

/// B = A + P with P PSD of random rank, so A <= B holds.
HermitianMatrix loewner_above(const HermitianMatrix& a, Rng& rng) {
  const int n = a.dim();
  const int rank = rng.integer(0, n);
  Matrix g = Matrix::Zero(n, std::max(rank, 1));
  for (int j = 0; j < rank; ++j)
    for (int i = 0; i < n; ++i) g(i, j) = rng.complex_normal();
  return a + HermitianMatrix::symmetrize(g * g.adjoint());
}

}  // namespace

TEST_CASE("loewner_leq examples") {
  const OrderVerdict v = loewner_leq(HermitianMatrix::zero(3), HermitianMatrix::identity(3));
  CHECK(v.holds);
  CHECK(v.margin == doctest::Approx(1.0));

  // (A^3+B^3)/2 - int (tA+(1-t)B)^3 for the 2x2 cubic pair; det = 77/36 - 9/4 = -1/9.
  const HermitianMatrix gap = HermitianMatrix::real({{11.0 / 6, 1.5}, {1.5, 7.0 / 6}});
  const double det = 11.0 / 6 * 7.0 / 6 - 2.25;
  CHECK(det == doctest::Approx(-1.0 / 9));
  const OrderVerdict g = loewner_leq(HermitianMatrix::zero(2), gap);
  CHECK_FALSE(g.holds);
  CHECK(g.margin < 0.0);
  REQUIRE(g.witness_vector);
  const CVector& x = *g.witness_vector;
  CHECK(x.dot(gap.matrix() * x).real() < 0.0);

  Rng rng(1);
  const HermitianMatrix a = random_hermitian(4, Interval::closed(-1, 1), rng);
  const OrderVerdict same = loewner_leq(a, a);
  CHECK(same.holds);
  CHECK(same.margin == 0.0);
  CHECK_THROWS_AS(loewner_leq(HermitianMatrix::zero(2), HermitianMatrix::zero(3)), Error);
}

TEST_CASE("eigen_dominance examples") {
  const OrderVerdict v = eigen_dominance(diag({1, 0}), diag({2, 1}));
  CHECK(v.holds);
  CHECK(v.margin == doctest::Approx(1.0));

  const HermitianMatrix b = HermitianMatrix::real({{1, 1}, {1, -0.5}});
  const double lam2 = (0.5 - std::sqrt(0.25 + 4 * 1.5)) / 2;  // roots of x^2 - 0.5x - 1.5
  CHECK(eigenvalues(b)(1) == doctest::Approx(lam2));
  const OrderVerdict w = eigen_dominance(HermitianMatrix::zero(2), b);
  CHECK_FALSE(w.holds);
  REQUIRE(w.witness_index);
  CHECK(*w.witness_index == 1);
  CHECK(w.margin == doctest::Approx(lam2));

  const OrderVerdict same = eigen_dominance(b, b);
  CHECK(same.holds);
  CHECK(same.margin == 0.0);
}

TEST_CASE("weak_majorization examples") {
  RVector a3(2), b3(2);
  a3 << 3, 1;
  b3 << 3, 2;
  const MajorizationReport r = weak_majorization(a3, b3);
  CHECK(r.holds);
  CHECK(r.deficits(0) == doctest::Approx(0));
  CHECK(r.deficits(1) == doctest::Approx(1));

  RVector a4(2);
  a4 << 4, 0;
  const MajorizationReport f = weak_majorization(a4, b3);
  CHECK_FALSE(f.holds);
  CHECK(f.deficits(0) == doctest::Approx(-1));
  CHECK(f.deficits(1) == doctest::Approx(1));
  REQUIRE(f.failing_k);
  CHECK(*f.failing_k == 0);

  const HermitianMatrix m = HermitianMatrix::real({{2, 1}, {1, 1}});
  const MajorizationReport same = weak_majorization(m, m);
  CHECK(same.holds);
  CHECK(same.deficits.cwiseAbs().maxCoeff() == 0.0);
  for (Eigen::Index k = 0; k < 2; ++k) CHECK(same.deficits(k) == same.partial_sums_b(k) - same.partial_sums_a(k));
}

TEST_CASE("unitary_witness examples") {
  const auto u = unitary_witness(diag({1, 0}), diag({2, 1}));
  REQUIRE(u);
  CHECK(is_unitary(*u));
  CHECK(loewner_leq(diag({1, 0}), diag({2, 1}).congruence(*u)).holds);

  const HermitianMatrix b = diag({0, 2});
  const auto swap = unitary_witness(diag({1, 0}), b);
  REQUIRE(swap);
  const HermitianMatrix rotated = b.congruence(*swap);
  CHECK(std::abs(rotated(0, 0).real() - 2.0) < 1e-14);
  CHECK(std::abs(rotated(1, 1).real()) < 1e-14);
  CHECK(loewner_leq(diag({1, 0}), rotated).holds);

  CHECK_FALSE(unitary_witness(diag({3, 0}), diag({2, 1})));
}

TEST_CASE("order chain on random pairs") {
  Rng rng(2026);
  int loewner_pairs = 0;
  int dominance_pairs = 0;
  for (int trial = 0; trial < 1500; ++trial) {
    const int n = 1 + trial % 8;
    const HermitianMatrix a = random_hermitian(n, Interval::closed(-3, 3), rng);
    const HermitianMatrix b = trial % 2 == 0 ? loewner_above(a, rng) : random_hermitian(n, Interval::closed(-3, 3), rng);
    const bool le = loewner_leq(a, b).holds;
    const bool dom = eigen_dominance(a, b).holds;
    const bool maj = weak_majorization(a, b).holds;
    if (le) {
      ++loewner_pairs;
      REQUIRE(dom);
    }
    if (dom) {
      ++dominance_pairs;
      REQUIRE(maj);
      const auto u = unitary_witness(a, b);
      REQUIRE(u);
      REQUIRE(is_unitary(*u, 1e-9));
      REQUIRE(loewner_leq(a, b.congruence(*u), 1e-8).holds);
    }
  }
  CHECK(loewner_pairs >= 750);
  CHECK(dominance_pairs >= loewner_pairs);
}

TEST_CASE("top_k_frame_sum examples") {
  const HermitianMatrix h = diag({3, 2, 1});
  const Matrix e = Matrix::Identity(3, 3);
  CHECK(top_k_frame_sum(h, e.leftCols(2)) == doctest::Approx(5));
  CHECK(top_k_frame_sum(h, e.rightCols(2)) == doctest::Approx(3));
  CHECK(top_k_eigen_sum(h, 2) == doctest::Approx(5));
  CHECK_THROWS_AS(top_k_frame_sum(h, 2.0 * e.leftCols(2)), Error);
}

TEST_CASE("frame sums never exceed the top-k eigenvalue sum") {
  Rng rng(22);
  for (int trial = 0; trial < 1200; ++trial) {
    const int n = 1 + trial % 9;
    const int k = rng.integer(1, n);
    const HermitianMatrix h = random_hermitian(n, Interval::closed(-5, 5), rng);
    const double bound = top_k_eigen_sum(h, k);
    const double value = top_k_frame_sum(h, random_frame(n, k, rng));
    REQUIRE(value <= bound + 1e-8 * unit_scale(std::abs(bound)));
    // The eigenvector frame attains the bound.
    const EigenSystem es = eig(h);
    REQUIRE(std::abs(top_k_frame_sum(h, es.vectors.leftCols(k)) - bound) <= 1e-9 * unit_scale(std::abs(bound)));
  }
}

TEST_CASE("Ky Fan scan examples") {
  const KyFanScanReport r = ky_fan_dominance_scan(diag({1, 1}), diag({2, 0.5}));
  CHECK(r.majorization.holds);
  CHECK(r.norms_ordered);
  CHECK(r.agree);
  CHECK(r.majorization.partial_sums_b(1) == doctest::Approx(2.5));

  const KyFanScanReport same = ky_fan_dominance_scan(diag({2, 1}), diag({2, 1}));
  CHECK(same.agree);
  CHECK(same.majorization.holds);

  const KyFanScanReport f = ky_fan_dominance_scan(diag({4, 0}), diag({3, 2}));
  CHECK_FALSE(f.majorization.holds);
  CHECK_FALSE(f.entries[0].norm_ordered);
  CHECK(f.agree);

  try {
    ky_fan_dominance_scan(diag({-1, 1}), diag({1, 1}));
    FAIL("accepted an indefinite matrix");
  } catch (const Error& e) {
    CHECK(e.code() == ErrorCode::NotPSD);
  }
}

TEST_CASE("Ky Fan scan agreement on random PSD pairs") {
  Rng rng(33);
  int holding = 0;
  for (int trial = 0; trial < 600; ++trial) {
    const int n = 1 + trial % 6;
    const HermitianMatrix a = random_psd(n, 2.0, rng);
    const HermitianMatrix b = trial % 3 == 0 ? loewner_above(a, rng) : random_psd(n, 2.0, rng);
    const KyFanScanReport r = ky_fan_dominance_scan(a, b);
    REQUIRE(r.agree);
    holding += r.majorization.holds;
  }
  CHECK(holding >= 200);
}

TEST_CASE("psd_check") {
  CHECK(psd_check(diag({0, 1})).holds);
  CHECK_FALSE(psd_check(diag({-0.1, 1})).holds);
  CHECK(psd_check(diag({-1e-12, 1})).holds);
}
