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

#include "hhmat/matcore.hpp"

#include <algorithm>
#include <cmath>
#include <numeric>
#include <sstream>

#include "hhmat/funcat.hpp"

namespace hhmat {

std::string_view to_string(ErrorCode code) {
  switch (code) {
    case ErrorCode::NonSquare: return "NonSquare";
    case ErrorCode::ExcessAsymmetry: return "ExcessAsymmetry";
    case ErrorCode::ConvergenceFailure: return "ConvergenceFailure";
    case ErrorCode::SpectrumOutOfDomain: return "SpectrumOutOfDomain";
    case ErrorCode::BadSpec: return "BadSpec";
    case ErrorCode::UnknownName: return "UnknownName";
    case ErrorCode::BadParams: return "BadParams";
    case ErrorCode::FlagContradicted: return "FlagContradicted";
    case ErrorCode::DimMismatch: return "DimMismatch";
    case ErrorCode::TargetDimMismatch: return "TargetDimMismatch";
    case ErrorCode::NotOrthonormal: return "NotOrthonormal";
    case ErrorCode::NotPSD: return "NotPSD";
    case ErrorCode::NotUnitary: return "NotUnitary";
    case ErrorCode::NoConvergence: return "NoConvergence";
    case ErrorCode::RTooLarge: return "RTooLarge";
    case ErrorCode::NotConvexFlag: return "NotConvexFlag";
    case ErrorCode::NotOperatorConvexFlag: return "NotOperatorConvexFlag";
    case ErrorCode::HypothesisUnmet: return "HypothesisUnmet";
    case ErrorCode::NotPositive: return "NotPositive";
    case ErrorCode::BadInterval: return "BadInterval";
    case ErrorCode::UnknownTheorem: return "UnknownTheorem";
    case ErrorCode::BadInput: return "BadInput";
  }
  return "Unknown";
}

namespace {

double asymmetry(const Matrix& m) {
  return (m - m.adjoint()).cwiseAbs().maxCoeff();
}

}  // namespace

HermitianMatrix HermitianMatrix::symmetrize(const Matrix& m) {
  if (m.rows() != m.cols()) throw Error(ErrorCode::NonSquare, "matrix is not square");
  if (m.size() == 0) return HermitianMatrix(Matrix(0, 0), 0.0);
  Matrix s = 0.5 * (m + m.adjoint());
  return HermitianMatrix(std::move(s), asymmetry(m));
}

HermitianMatrix HermitianMatrix::zero(int n) { return HermitianMatrix(Matrix::Zero(n, n), 0.0); }

HermitianMatrix HermitianMatrix::identity(int n) {
  return HermitianMatrix(Matrix::Identity(n, n), 0.0);
}

HermitianMatrix HermitianMatrix::diagonal(const std::vector<double>& d) {
  return diagonal(RVector(Eigen::Map<const RVector>(d.data(), static_cast<Eigen::Index>(d.size()))));
}

HermitianMatrix HermitianMatrix::diagonal(const RVector& d) {
  Matrix m = Matrix::Zero(d.size(), d.size());
  for (Eigen::Index i = 0; i < d.size(); ++i) m(i, i) = d(i);
  return HermitianMatrix(std::move(m), 0.0);
}

HermitianMatrix HermitianMatrix::real(std::initializer_list<std::initializer_list<double>> rows) {
  const auto n = static_cast<Eigen::Index>(rows.size());
  Matrix m(n, n);
  Eigen::Index i = 0;
  for (const auto& row : rows) {
    if (static_cast<Eigen::Index>(row.size()) != n) throw Error(ErrorCode::NonSquare, "ragged rows");
    Eigen::Index j = 0;
    for (double v : row) m(i, j++) = v;
    ++i;
  }
  return hermitian_from(m);
}

double HermitianMatrix::max_abs_entry() const {
  return m_.size() == 0 ? 0.0 : m_.cwiseAbs().maxCoeff();
}

HermitianMatrix HermitianMatrix::congruence(const Matrix& x) const {
  if (x.rows() != m_.rows()) {
    throw Error(ErrorCode::DimMismatch, "congruence factor has " + std::to_string(x.rows()) +
                                            " rows, matrix has dimension " + std::to_string(dim()));
  }
  return symmetrize(x.adjoint() * m_ * x);
}

HermitianMatrix operator+(const HermitianMatrix& a, const HermitianMatrix& b) {
  if (a.dim() != b.dim()) throw Error(ErrorCode::DimMismatch, "sum of different dimensions");
  return HermitianMatrix(a.m_ + b.m_, 0.0);
}

HermitianMatrix operator-(const HermitianMatrix& a, const HermitianMatrix& b) {
  if (a.dim() != b.dim()) throw Error(ErrorCode::DimMismatch, "difference of different dimensions");
  return HermitianMatrix(a.m_ - b.m_, 0.0);
}

HermitianMatrix operator*(double s, const HermitianMatrix& a) { return HermitianMatrix(s * a.m_, 0.0); }

HermitianMatrix hermitian_from(const Matrix& raw) {
  if (raw.rows() != raw.cols()) {
    throw Error(ErrorCode::NonSquare, std::to_string(raw.rows()) + "x" + std::to_string(raw.cols()));
  }
  if (raw.size() == 0) return HermitianMatrix(Matrix(0, 0), 0.0);
  if (!raw.allFinite()) throw Error(ErrorCode::BadInput, "non-finite entry");
  const double residual = asymmetry(raw);
  const double bound = HermitianMatrix::kAsymmetryBound * unit_scale(raw.cwiseAbs().maxCoeff());
  if (residual > bound) {
    std::ostringstream os;
    os << "asymmetry residual " << residual << " exceeds " << bound;
    throw Error(ErrorCode::ExcessAsymmetry, os.str());
  }
  return HermitianMatrix(0.5 * (raw + raw.adjoint()), residual);
}

HermitianMatrix hermitian_from(const std::vector<std::vector<Complex>>& grid) {
  const auto n = static_cast<Eigen::Index>(grid.size());
  Matrix m(n, n);
  for (Eigen::Index i = 0; i < n; ++i) {
    if (static_cast<Eigen::Index>(grid[i].size()) != n) {
      throw Error(ErrorCode::NonSquare, "row " + std::to_string(i) + " has " +
                                            std::to_string(grid[i].size()) + " entries, expected " +
                                            std::to_string(n));
    }
    for (Eigen::Index j = 0; j < n; ++j) m(i, j) = grid[i][j];
  }
  return hermitian_from(m);
}

EigenSystem eig(const HermitianMatrix& h) {
  const int n = h.dim();
  Eigen::SelfAdjointEigenSolver<Matrix> solver(h.matrix(), Eigen::ComputeEigenvectors);
  if (solver.info() != Eigen::Success) {
    throw Error(ErrorCode::ConvergenceFailure, "Hermitian eigensolver did not converge");
  }
  // Solver returns ascending values; stable descending sort keeps solver order on ties.
  std::vector<int> order(n);
  std::iota(order.begin(), order.end(), 0);
  const RVector& w = solver.eigenvalues();
  std::stable_sort(order.begin(), order.end(), [&](int i, int j) { return w(i) > w(j); });

  EigenSystem es{RVector(n), Matrix(n, n)};
  for (int j = 0; j < n; ++j) {
    es.values(j) = w(order[j]);
    es.vectors.col(j) = solver.eigenvectors().col(order[j]);
  }
  return es;
}

RVector eigenvalues(const HermitianMatrix& h) {
  Eigen::SelfAdjointEigenSolver<Matrix> solver(h.matrix(), Eigen::EigenvaluesOnly);
  if (solver.info() != Eigen::Success) {
    throw Error(ErrorCode::ConvergenceFailure, "Hermitian eigensolver did not converge");
  }
  RVector w = solver.eigenvalues();
  std::sort(w.data(), w.data() + w.size(), std::greater<>());
  return w;
}

double lambda_max(const HermitianMatrix& h) { return eigenvalues(h)(0); }

double lambda_min(const HermitianMatrix& h) {
  const RVector w = eigenvalues(h);
  return w(w.size() - 1);
}

RVector singular_values(const HermitianMatrix& h) {
  RVector s = eigenvalues(h).cwiseAbs();
  std::sort(s.data(), s.data() + s.size(), std::greater<>());
  return s;
}

namespace {

double domain_slack(const Interval& dom, const RVector& values) {
  const double spread = dom.bounded() ? dom.length() : unit_scale(values.cwiseAbs().maxCoeff());
  return 1e-9 * spread;
}

}  // namespace

void require_spectrum_in_domain(const ScalarFunction& f, const RVector& values) {
  const Interval& dom = f.domain();
  const double slack = domain_slack(dom, values);
  std::vector<double> offending;
  for (Eigen::Index j = 0; j < values.size(); ++j) {
    if (!dom.contains(values(j), slack)) offending.push_back(values(j));
  }
  if (!offending.empty()) {
    std::ostringstream os;
    os << f.name() << " on " << dom.str() << ": eigenvalues";
    for (double v : offending) os << ' ' << v;
    throw Error(ErrorCode::SpectrumOutOfDomain, os.str());
  }
}

HermitianMatrix apply_function(const ScalarFunction& f, const HermitianMatrix& h) {
  const EigenSystem es = eig(h);
  require_spectrum_in_domain(f, es.values);
  const Interval& dom = f.domain();
  return apply_spectral(es, [&](double x) {
    // Values inside the slack band are clamped onto the closed end.
    if (x < dom.lo) x = dom.lo;
    if (x > dom.hi) x = dom.hi;
    return f(x);
  });
}

std::string NormSpec::label() const {
  std::ostringstream os;
  switch (kind) {
    case Kind::KyFan: os << "kyfan:" << k; break;
    case Kind::Schatten: os << "schatten:" << p; break;
    case Kind::Operator: os << "op"; break;
  }
  return os.str();
}

NormSpec NormSpec::parse(const std::string& text) {
  const auto colon = text.find(':');
  const std::string head = text.substr(0, colon);
  const std::string arg = colon == std::string::npos ? "" : text.substr(colon + 1);
  try {
    if (head == "op" || head == "operator") return op();
    if (head == "kyfan") return ky_fan(std::stoi(arg));
    if (head == "schatten") return schatten(std::stod(arg));
  } catch (const std::logic_error&) {
    throw Error(ErrorCode::BadSpec, "bad norm parameter in '" + text + "'");
  }
  throw Error(ErrorCode::BadSpec, "unknown norm '" + text + "'");
}

void validate(const NormSpec& spec, int n) {
  switch (spec.kind) {
    case NormSpec::Kind::KyFan:
      if (spec.k < 1 || spec.k > n) {
        throw Error(ErrorCode::BadSpec, "Ky Fan k=" + std::to_string(spec.k) + " outside 1.." +
                                            std::to_string(n));
      }
      break;
    case NormSpec::Kind::Schatten:
      if (!(spec.p >= 1.0) || !std::isfinite(spec.p)) {
        throw Error(ErrorCode::BadSpec, "Schatten p must be a finite real >= 1");
      }
      break;
    case NormSpec::Kind::Operator: break;
  }
}

double ui_norm_from_singular_values(const RVector& sv, const NormSpec& spec) {
  validate(spec, static_cast<int>(sv.size()));
  switch (spec.kind) {
    case NormSpec::Kind::KyFan: return sv.head(spec.k).sum();
    case NormSpec::Kind::Operator: return sv(0);
    case NormSpec::Kind::Schatten: {
      const double top = sv(0);
      if (top == 0.0) return 0.0;
      // Scaled by sigma_1 to keep large p from overflowing.
      double acc = 0.0;
      for (Eigen::Index i = 0; i < sv.size(); ++i) acc += std::pow(sv(i) / top, spec.p);
      return top * std::pow(acc, 1.0 / spec.p);
    }
  }
  return 0.0;
}

double ui_norm(const HermitianMatrix& h, const NormSpec& spec) {
  validate(spec, h.dim());
  return ui_norm_from_singular_values(singular_values(h), spec);
}

double op_norm(const Matrix& m) {
  if (m.size() == 0) return 0.0;
  Eigen::JacobiSVD<Matrix> svd(m);
  return svd.singularValues()(0);
}

bool is_unitary(const Matrix& u, double tol) {
  if (u.rows() != u.cols()) return false;
  const Matrix gap = u.adjoint() * u - Matrix::Identity(u.rows(), u.cols());
  return op_norm(gap) <= tol;
}

}  // namespace hhmat
