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

#include <cstdint>
#include <optional>
#include <random>

#include "hhmat/funcat.hpp"
#include "hhmat/matcore.hpp"

namespace hhmat {

/// splitmix64 finalizer over (root, index): per-trial seeds independent of
/// scheduling.
std::uint64_t mix_seed(std::uint64_t root, std::uint64_t index);

/// mt19937_64 with hand-rolled uniform/normal transforms, so draws do not
/// depend on the standard library's distribution implementations.
class Rng {
 public:
  explicit Rng(std::uint64_t seed) : engine_(seed) {}

  double uniform();  // [0, 1)
  double uniform(double a, double b) { return a + (b - a) * uniform(); }
  int integer(int lo, int hi);  // inclusive
  double normal();
  Complex complex_normal();

 private:
  std::mt19937_64 engine_;
  std::optional<double> spare_;
};

/// Complex Gaussian, symmetrized, then affinely rescaled so that
/// lambda_min = omega + u (Omega-omega)/10 and lambda_max = Omega - v (Omega-omega)/10.
HermitianMatrix random_hermitian(int n, double omega, double Omega, std::uint64_t seed);
HermitianMatrix random_hermitian(int n, const Interval& interval, Rng& rng);
/// Haar-distributed unitary (QR of a complex Gaussian with phase fix).
Matrix random_unitary(int n, Rng& rng);
/// n×m with orthonormal columns, m <= n.
Matrix random_isometry(int n, int m, Rng& rng);
CVector random_unit_vector(int n, Rng& rng);
/// Orthonormal k-frame from Gram–Schmidt on Gaussian vectors.
Matrix random_frame(int n, int k, Rng& rng);
/// PSD with eigenvalues uniform in [0, scale].
HermitianMatrix random_psd(int n, double scale, Rng& rng);

}  // namespace hhmat
