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

#include <complex>
#include <string>
#include <vector>

#include <Eigen/Dense>

#include "hhmat/errors.hpp"

namespace hhmat {

using Complex = std::complex<double>;
using Matrix = Eigen::MatrixXcd;
using CVector = Eigen::VectorXcd;
using RVector = Eigen::VectorXd;

class ScalarFunction;

/// max(1, scale): every relative tolerance in the library is taken against this.
inline double unit_scale(double scale) { return scale > 1.0 ? scale : 1.0; }

/// Dense complex matrix with exact Hermitian symmetry.
///
/// Raw input is symmetrized as (M + M*)/2; the asymmetry residual of the raw
/// input is kept for diagnostics. Values are immutable after construction.
class HermitianMatrix {
 public:
  /// Bound on the raw asymmetry, relative to max(1, max-abs-entry).
  static constexpr double kAsymmetryBound = 1e-10;

  HermitianMatrix() = default;

  /// Symmetrizes without the rejection check. For results of internal
  /// computations that are Hermitian up to rounding.
  static HermitianMatrix symmetrize(const Matrix& m);

  static HermitianMatrix zero(int n);
  static HermitianMatrix identity(int n);
  static HermitianMatrix diagonal(const std::vector<double>& d);
  static HermitianMatrix diagonal(const RVector& d);
  static HermitianMatrix real(std::initializer_list<std::initializer_list<double>> rows);

  int dim() const { return static_cast<int>(m_.rows()); }
  const Matrix& matrix() const { return m_; }
  Complex operator()(int i, int j) const { return m_(i, j); }

  /// max_{ij} |raw_ij - conj(raw_ji)| of the input this was built from.
  double asymmetry_residual() const { return residual_; }
  double max_abs_entry() const;
  double trace() const { return m_.trace().real(); }

  /// X* H X for an n×m matrix X.
  HermitianMatrix congruence(const Matrix& x) const;

  friend HermitianMatrix operator+(const HermitianMatrix& a, const HermitianMatrix& b);
  friend HermitianMatrix operator-(const HermitianMatrix& a, const HermitianMatrix& b);
  friend HermitianMatrix operator*(double s, const HermitianMatrix& a);
  friend HermitianMatrix operator*(const HermitianMatrix& a, double s) { return s * a; }

 private:
  friend HermitianMatrix hermitian_from(const Matrix& raw);
  explicit HermitianMatrix(Matrix m, double residual) : m_(std::move(m)), residual_(residual) {}

  Matrix m_;
  double residual_ = 0.0;
};

/// Validating constructor for external input. Throws NonSquare or
/// ExcessAsymmetry.
HermitianMatrix hermitian_from(const Matrix& raw);
HermitianMatrix hermitian_from(const std::vector<std::vector<Complex>>& grid);

/// Eigenvalues sorted descending with matching orthonormal eigenvector columns.
struct EigenSystem {
  RVector values;
  Matrix vectors;
};

EigenSystem eig(const HermitianMatrix& h);

/// Descending eigenvalues only.
RVector eigenvalues(const HermitianMatrix& h);

double lambda_max(const HermitianMatrix& h);
double lambda_min(const HermitianMatrix& h);

/// Singular values (|eigenvalues| for Hermitian input), descending.
RVector singular_values(const HermitianMatrix& h);

/// V diag(g(values)) V*, for any callable on the spectrum.
template <class F>
HermitianMatrix apply_spectral(const EigenSystem& es, F&& g) {
  RVector mapped(es.values.size());
  for (Eigen::Index j = 0; j < es.values.size(); ++j) mapped(j) = g(es.values(j));
  Matrix out = es.vectors * mapped.asDiagonal() * es.vectors.adjoint();
  return HermitianMatrix::symmetrize(out);
}

/// Throws SpectrumOutOfDomain unless every eigenvalue lies in f's domain,
/// closed ends stretched by 1e-9 |J| (or 1e-9 max(1, spectral radius) for an
/// unbounded domain).
void require_spectrum_in_domain(const ScalarFunction& f, const RVector& eigenvalues);

/// Functional calculus f(H). Throws SpectrumOutOfDomain listing the offending
/// eigenvalues when the spectrum leaves f's domain by more than the slack.
HermitianMatrix apply_function(const ScalarFunction& f, const HermitianMatrix& h);

struct NormSpec {
  enum class Kind { KyFan, Schatten, Operator };

  Kind kind = Kind::Operator;
  int k = 0;
  double p = 0.0;

  static NormSpec ky_fan(int k) { return {Kind::KyFan, k, 0.0}; }
  static NormSpec schatten(double p) { return {Kind::Schatten, 0, p}; }
  static NormSpec op() { return {Kind::Operator, 0, 0.0}; }

  std::string label() const;
  /// Parses "kyfan:2", "schatten:1.5", "op".
  static NormSpec parse(const std::string& text);
};

/// Throws BadSpec when the norm does not fit dimension n.
void validate(const NormSpec& spec, int n);

double ui_norm(const HermitianMatrix& h, const NormSpec& spec);
double ui_norm_from_singular_values(const RVector& sv, const NormSpec& spec);

/// Largest singular value of an arbitrary (possibly non-square) matrix.
double op_norm(const Matrix& m);
inline double op_norm(const HermitianMatrix& h) { return singular_values(h)(0); }

/// ||U*U - I||_op <= tol.
bool is_unitary(const Matrix& u, double tol = 1e-9);

}  // namespace hhmat
