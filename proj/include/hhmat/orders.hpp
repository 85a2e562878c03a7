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
#include <vector>

#include "hhmat/matcore.hpp"

namespace hhmat {

inline constexpr double kDefaultTol = 1e-9;

/// Outcome of a Loewner or eigenvalue-dominance comparison.
struct OrderVerdict {
  bool holds = false;
  /// Signed: min eigenvalue of the gap, or min entrywise eigenvalue deficit.
  double margin = 0.0;
  /// Scale the tolerance was taken against (already max(1, .)).
  double scale = 1.0;
  /// Failure witness: eigenvector of the most negative gap eigenvalue
  /// (Loewner) or failing index (dominance).
  std::optional<CVector> witness_vector;
  std::optional<int> witness_index;

  double normalized_margin() const { return margin / scale; }
};

struct MajorizationReport {
  RVector partial_sums_a;
  RVector partial_sums_b;
  RVector deficits;
  bool holds = false;
  double scale = 1.0;
  /// First k (0-based) with a deficit below tolerance.
  std::optional<int> failing_k;

  double min_deficit() const { return deficits.minCoeff(); }
  double normalized_margin() const { return min_deficit() / scale; }
};

/// A <= B: lambda_min(B - A) >= -tol * max(1, ||B - A||_op).
OrderVerdict loewner_leq(const HermitianMatrix& a, const HermitianMatrix& b, double tol = kDefaultTol);

/// lambda_j(A) <= lambda_j(B) for all j.
OrderVerdict eigen_dominance(const HermitianMatrix& a, const HermitianMatrix& b, double tol = kDefaultTol);

/// lambda(A) weakly majorized by lambda(B).
MajorizationReport weak_majorization(const HermitianMatrix& a, const HermitianMatrix& b,
                                     double tol = kDefaultTol);
MajorizationReport weak_majorization(const RVector& lambda_a, const RVector& lambda_b,
                                     double tol = kDefaultTol);

/// PSD test via the minimum eigenvalue; the verdict margin is lambda_min.
OrderVerdict psd_check(const HermitianMatrix& h, double tol = kDefaultTol);

/// U = V_B V_A* with A <= U* B U, when eigenvalue dominance holds.
std::optional<Matrix> unitary_witness(const HermitianMatrix& a, const HermitianMatrix& b,
                                      double tol = kDefaultTol);

/// sum_j <H x_j, x_j> over the columns of `frame`. Throws NotOrthonormal.
double top_k_frame_sum(const HermitianMatrix& h, const Matrix& frame);

/// lambda_1 + ... + lambda_k.
double top_k_eigen_sum(const HermitianMatrix& h, int k);

struct KyFanScanEntry {
  int k = 0;
  double norm_a = 0.0;
  double norm_b = 0.0;
  bool norm_ordered = false;
  bool partial_sum_ordered = false;
};

struct KyFanScanReport {
  MajorizationReport majorization;
  std::vector<KyFanScanEntry> entries;
  bool norms_ordered = false;
  /// Weak majorization and the Ky Fan norm family give the same answer.
  bool agree = false;
};

/// Compares weak majorization with the Ky Fan norm family on PSD inputs.
/// Throws NotPSD.
KyFanScanReport ky_fan_dominance_scan(const HermitianMatrix& a, const HermitianMatrix& b,
                                      double tol = kDefaultTol);

}  // namespace hhmat
