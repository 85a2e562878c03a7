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

#include <string>
#include <vector>

#include "hhmat/matcore.hpp"

namespace hhmat {

/// Positive linear map M_n -> M_m, held by its structural factors.
class PositiveLinearMap {
 public:
  enum class Kind { Identity, Compression, Pinching, CongruenceSum, BlockDiagonalSum };

  static PositiveLinearMap identity(int n);
  /// A -> V* A V for an isometry V (n×m, V*V = I_m). Throws BadParams.
  static PositiveLinearMap compression(Matrix v);
  /// Compression onto the first k coordinates.
  static PositiveLinearMap compress_leading(int n, int k);
  /// Keeps the diagonal blocks of the given sizes, zeroes the rest.
  static PositiveLinearMap pinching(std::vector<int> block_sizes);
  /// A -> sum_i X_i* A X_i, every X_i n×m.
  static PositiveLinearMap congruence_sum(std::vector<Matrix> factors);

  Kind kind() const { return kind_; }
  int source_dim() const { return source_dim_; }
  int target_dim() const { return target_dim_; }

  /// Congruence factors (Compression: the single isometry).
  const std::vector<Matrix>& factors() const { return factors_; }
  const std::vector<int>& blocks() const { return blocks_; }
  const std::vector<PositiveLinearMap>& parts() const { return parts_; }

  /// Short human-readable form, e.g. "compress:2", "congruence[3]".
  std::string descriptor() const;

 private:
  friend PositiveLinearMap diag_block_map(std::vector<PositiveLinearMap> maps);

  PositiveLinearMap(Kind kind, int n, int m) : kind_(kind), source_dim_(n), target_dim_(m) {}

  Kind kind_;
  int source_dim_;
  int target_dim_;
  std::vector<Matrix> factors_;
  std::vector<int> blocks_;
  std::vector<PositiveLinearMap> parts_;
};

/// Throws DimMismatch when dim(A) != source_dim.
HermitianMatrix apply_map(const PositiveLinearMap& phi, const HermitianMatrix& a);

enum class Unitality { Unital, Subunital, Neither };

std::string_view to_string(Unitality u);

struct UnitalityReport {
  Unitality status = Unitality::Neither;
  /// ||Phi(I) - I||_op
  double deviation = 0.0;
  double lambda_min = 0.0;
  double lambda_max = 0.0;

  /// Unital or 0 < Phi(I) <= I.
  bool at_most_identity() const { return status != Unitality::Neither; }
};

/// Classifies Phi(I_n): unital within 1e-10, subunital with strict positivity
/// (lambda_min > 1e-12), otherwise neither.
UnitalityReport unitality_status(const PositiveLinearMap& phi);
UnitalityReport classify_unitality(const HermitianMatrix& image_of_identity);

/// Psi(diag(A_1, ..., A_k)) = sum_i Phi_i(A_i); off-diagonal blocks of a
/// general input are discarded. Throws TargetDimMismatch.
PositiveLinearMap diag_block_map(std::vector<PositiveLinearMap> maps);

HermitianMatrix block_diagonal(const std::vector<HermitianMatrix>& blocks);

/// CLI descriptors: "identity", "compress:k", "pinch:b1,b2,...",
/// "congruence:<file>" (JSON list of matrix literals). n is the source dimension.
PositiveLinearMap parse_map(const std::string& descriptor, int n);

}  // namespace hhmat
