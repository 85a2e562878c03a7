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
#include <cstdio>
#include <fstream>

#include "helpers.hpp"
#include "hhmat/harness.hpp"
#include "hhmat/orders.hpp"
#include "hhmat/plmaps.hpp"

using namespace hhmat;
using hhmat::test::max_abs_diff;

namespace {

const HermitianMatrix kA = HermitianMatrix::real({{2, 1}, {1, 1}});

ErrorCode code_of(auto&& fn) {
  try {
    fn();
  } catch (const Error& e) {
    return e.code();
  }
  FAIL("no error thrown");
  return ErrorCode::BadInput;
}

}  // namespace

TEST_CASE("apply_map examples") {
  CHECK(max_abs_diff(apply_map(PositiveLinearMap::identity(2), kA), kA) == 0.0);

  Matrix e1 = Matrix::Zero(2, 1);
  e1(0, 0) = 1;
  const HermitianMatrix corner = apply_map(PositiveLinearMap::compression(e1), kA);
  CHECK(corner.dim() == 1);
  CHECK(corner(0, 0).real() == doctest::Approx(2));

  const Matrix half = Matrix::Identity(2, 2) / std::sqrt(2.0);
  const PositiveLinearMap avg = PositiveLinearMap::congruence_sum({half, half});
  CHECK(max_abs_diff(apply_map(avg, kA), kA) < 1e-15);

  const HermitianMatrix p = apply_map(PositiveLinearMap::pinching({1, 1}), kA);
  CHECK(max_abs_diff(p, HermitianMatrix::diagonal(std::vector<double>{2, 1})) == 0.0);

  CHECK(code_of([] { apply_map(PositiveLinearMap::identity(3), kA); }) == ErrorCode::DimMismatch);
}

TEST_CASE("unitality classification") {
  CHECK(unitality_status(PositiveLinearMap::identity(3)).status == Unitality::Unital);
  Rng rng(4);
  CHECK(unitality_status(PositiveLinearMap::compression(random_isometry(5, 3, rng))).status == Unitality::Unital);
  const UnitalityReport sub = unitality_status(PositiveLinearMap::congruence_sum({Matrix::Identity(2, 2) / 2.0}));
  CHECK(sub.status == Unitality::Subunital);
  CHECK(sub.lambda_max == doctest::Approx(0.25));
  CHECK(sub.at_most_identity());
  CHECK(unitality_status(PositiveLinearMap::congruence_sum({2.0 * Matrix::Identity(2, 2)})).status ==
        Unitality::Neither);
  // Phi(I) singular: not strictly positive.
  Matrix rank_one = Matrix::Zero(2, 2);
  rank_one(0, 0) = 1;
  CHECK(unitality_status(PositiveLinearMap::congruence_sum({rank_one})).status == Unitality::Neither);
  CHECK(unitality_status(PositiveLinearMap::pinching({2, 1})).status == Unitality::Unital);
}

TEST_CASE("map construction checks") {
  CHECK(code_of([] { PositiveLinearMap::compression(2.0 * Matrix::Identity(2, 2)); }) == ErrorCode::BadParams);
  CHECK(code_of([] { PositiveLinearMap::compression(Matrix::Identity(2, 3)); }) == ErrorCode::BadParams);
  CHECK(code_of([] { PositiveLinearMap::pinching({2, 0}); }) == ErrorCode::BadParams);
  CHECK(code_of([] {
          PositiveLinearMap::congruence_sum({Matrix::Identity(2, 2), Matrix::Identity(3, 3)});
        }) == ErrorCode::DimMismatch);
}

TEST_CASE("diag_block_map examples") {
  const PositiveLinearMap phi = PositiveLinearMap::compress_leading(3, 2);
  const PositiveLinearMap same = diag_block_map({phi});
  Rng rng(5);
  const HermitianMatrix a = random_hermitian(3, Interval::closed(-1, 1), rng);
  CHECK(max_abs_diff(apply_map(same, a), apply_map(phi, a)) == 0.0);

  const Matrix half = Matrix::Identity(2, 2) / std::sqrt(2.0);
  const PositiveLinearMap h = PositiveLinearMap::congruence_sum({half});
  const PositiveLinearMap psi = diag_block_map({h, h});
  const HermitianMatrix b = HermitianMatrix::real({{1, 0}, {0, 0}});
  CHECK(psi.source_dim() == 4);
  CHECK(psi.target_dim() == 2);
  CHECK(max_abs_diff(apply_map(psi, block_diagonal({kA, b})), 0.5 * (kA + b)) < 1e-15);

  const Matrix w = random_isometry(6, 2, rng);
  const Matrix v1 = w.topRows(3);
  const Matrix v2 = w.bottomRows(3);
  const PositiveLinearMap c1 = PositiveLinearMap::congruence_sum({v1});
  const PositiveLinearMap c2 = PositiveLinearMap::congruence_sum({v2});
  const HermitianMatrix image = apply_map(diag_block_map({c1, c2}), HermitianMatrix::identity(6));
  CHECK(max_abs_diff(image.matrix(), v1.adjoint() * v1 + v2.adjoint() * v2) < 1e-14);
  CHECK(max_abs_diff(image.matrix(), Matrix::Identity(2, 2)) < 1e-12);

  CHECK(code_of([] {
          diag_block_map({PositiveLinearMap::identity(2), PositiveLinearMap::identity(3)});
        }) == ErrorCode::TargetDimMismatch);
}

TEST_CASE("maps are positive, linear and satisfy the Kadison inequality") {
  Rng rng(6);
  const char* kinds[] = {"identity", "random-compress", "random-pinch", "random-congruence"};
  for (const char* kind : kinds) {
    CAPTURE(kind);
    for (int trial = 0; trial < 500; ++trial) {
      const int n = 2 + trial % 5;
      const int m = 1 + trial % n;
      const PositiveLinearMap phi = make_map(kind, n, m, rng);

      const HermitianMatrix p = random_psd(n, 3.0, rng);
      const HermitianMatrix image = apply_map(phi, p);
      REQUIRE(psd_check(image, 1e-9).holds);

      const HermitianMatrix a = random_hermitian(n, Interval::closed(-2, 2), rng);
      const HermitianMatrix b = random_hermitian(n, Interval::closed(-2, 2), rng);
      const double s = rng.uniform(-2, 2);
      const double t = rng.uniform(-2, 2);
      const HermitianMatrix lin = apply_map(phi, s * a + t * b);
      const HermitianMatrix sep = s * apply_map(phi, a) + t * apply_map(phi, b);
      REQUIRE(max_abs_diff(lin, sep) <= 1e-10 * unit_scale(sep.max_abs_entry()));

      REQUIRE(unitality_status(phi).status == Unitality::Unital);
      const HermitianMatrix pa = apply_map(phi, a);
      const HermitianMatrix a2 = HermitianMatrix::symmetrize(a.matrix() * a.matrix());
      const HermitianMatrix pa2 = HermitianMatrix::symmetrize(pa.matrix() * pa.matrix());
      REQUIRE(loewner_leq(pa2, apply_map(phi, a2), 1e-8).holds);
    }
  }
}

TEST_CASE("parse_map descriptors") {
  CHECK(parse_map("identity", 3).kind() == PositiveLinearMap::Kind::Identity);
  const PositiveLinearMap c = parse_map("compress:2", 4);
  CHECK(c.target_dim() == 2);
  const PositiveLinearMap p = parse_map("pinch:1,2", 3);
  CHECK(p.blocks() == std::vector<int>{1, 2});
  CHECK(code_of([] { parse_map("pinch:1,1", 3); }) == ErrorCode::DimMismatch);
  CHECK(code_of([] { parse_map("compress:5", 3); }) == ErrorCode::BadParams);
  CHECK(code_of([] { parse_map("twist", 3); }) == ErrorCode::UnknownName);

  const std::string path = "test_plmaps_factors.json";
  {
    std::ofstream out(path);
    out << R"([{"n": 2, "re": [["0.5", 0], [0, 0.5]]}, {"n": 2, "re": [[0.5, 0], [0, 0.5]], "im": [[0, 0.5], [-0.5, 0]]}])";
  }
  const PositiveLinearMap g = parse_map("congruence:" + path, 2);
  CHECK(g.factors().size() == 2);
  const UnitalityReport u = unitality_status(g);
  // X_2* X_2 has eigenvalues 0 and 1, shifted by the 1/4 from X_1.
  CHECK(u.lambda_min == doctest::Approx(0.25));
  CHECK(u.lambda_max == doctest::Approx(1.25));
  std::remove(path.c_str());
  CHECK(code_of([] { parse_map("congruence:/nonexistent/file.json", 2); }) == ErrorCode::BadInput);
}
