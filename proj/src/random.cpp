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

#include "hhmat/random.hpp"

#include <cmath>
#include <numbers>

namespace hhmat {

std::uint64_t mix_seed(std::uint64_t root, std::uint64_t index) {
  std::uint64_t z = root + 0x9e3779b97f4a7c15ULL * (index + 1);
  z = (z ^ (z >> 30)) * 0xbf58476d1ce4e5b9ULL;
  z = (z ^ (z >> 27)) * 0x94d049bb133111ebULL;
  return z ^ (z >> 31);
}

double Rng::uniform() {
  return static_cast<double>(engine_() >> 11) * 0x1.0p-53;
}

int Rng::integer(int lo, int hi) {
  const auto span = static_cast<std::uint64_t>(hi - lo + 1);
  return lo + static_cast<int>(engine_() % span);
}

double Rng::normal() {
  if (spare_) {
    const double v = *spare_;
    spare_.reset();
    return v;
  }
  double u1 = uniform();
  while (u1 <= 0.0) u1 = uniform();
  const double u2 = uniform();
  const double radius = std::sqrt(-2.0 * std::log(u1));
  const double angle = 2.0 * std::numbers::pi * u2;
  spare_ = radius * std::sin(angle);
  return radius * std::cos(angle);
}

Complex Rng::complex_normal() {
  const double re = normal();
  const double im = normal();
  return {re * std::numbers::sqrt2 / 2.0, im * std::numbers::sqrt2 / 2.0};
}

namespace {

Matrix gaussian(int rows, int cols, Rng& rng) {
  Matrix g(rows, cols);
  for (int j = 0; j < cols; ++j)
    for (int i = 0; i < rows; ++i) g(i, j) = rng.complex_normal();
  return g;
}

}  // namespace

HermitianMatrix random_hermitian(int n, const Interval& interval, Rng& rng) {
  if (!interval.bounded() || !(interval.lo < interval.hi)) {
    throw Error(ErrorCode::BadInterval, "random_hermitian needs a bounded interval, got " + interval.str());
  }
  if (n < 1) throw Error(ErrorCode::BadParams, "dimension must be positive");
  const double width = interval.length();
  const double lo_target = interval.lo + rng.uniform() * 0.1 * width;
  const double hi_target = interval.hi - rng.uniform() * 0.1 * width;
  if (n == 1) {
    return HermitianMatrix::diagonal(std::vector<double>{rng.uniform(lo_target, hi_target)});
  }
  const Matrix g = gaussian(n, n, rng);
  const HermitianMatrix h = HermitianMatrix::symmetrize(g);
  const EigenSystem es = eig(h);
  const double top = es.values(0);
  const double bottom = es.values(n - 1);
  // Affine remap of the spectrum; eigenvectors are kept.
  const double slope = (hi_target - lo_target) / (top - bottom);
  return apply_spectral(es, [&](double x) { return lo_target + slope * (x - bottom); });
}

HermitianMatrix random_hermitian(int n, double omega, double Omega, std::uint64_t seed) {
  Rng rng(seed);
  return random_hermitian(n, Interval::closed(omega, Omega), rng);
}

Matrix random_unitary(int n, Rng& rng) {
  const Matrix g = gaussian(n, n, rng);
  Eigen::HouseholderQR<Matrix> qr(g);
  Matrix q = qr.householderQ() * Matrix::Identity(n, n);
  const Matrix r = qr.matrixQR().triangularView<Eigen::Upper>();
  for (int j = 0; j < n; ++j) {
    const Complex d = r(j, j);
    const double mag = std::abs(d);
    if (mag > 0.0) q.col(j) *= d / mag;
  }
  return q;
}

Matrix random_isometry(int n, int m, Rng& rng) {
  if (m > n) throw Error(ErrorCode::BadParams, "isometry needs m <= n");
  return random_unitary(n, rng).leftCols(m);
}

CVector random_unit_vector(int n, Rng& rng) {
  CVector v(n);
  for (int i = 0; i < n; ++i) v(i) = rng.complex_normal();
  return v / v.norm();
}

Matrix random_frame(int n, int k, Rng& rng) {
  Matrix frame(n, k);
  for (int j = 0; j < k; ++j) {
    CVector v(n);
    for (int i = 0; i < n; ++i) v(i) = rng.complex_normal();
    // Two passes of classical Gram–Schmidt.
    for (int pass = 0; pass < 2; ++pass) {
      for (int q = 0; q < j; ++q) v -= frame.col(q).dot(v) * frame.col(q);
    }
    frame.col(j) = v / v.norm();
  }
  return frame;
}

HermitianMatrix random_psd(int n, double scale, Rng& rng) {
  const Matrix u = random_unitary(n, rng);
  RVector d(n);
  for (int i = 0; i < n; ++i) d(i) = rng.uniform(0.0, scale);
  return HermitianMatrix::symmetrize(u * d.asDiagonal() * u.adjoint());
}

}  // namespace hhmat
