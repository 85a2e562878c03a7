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

#include "hhmat/orders.hpp"

#include <algorithm>
#include <cmath>

namespace hhmat {

namespace {

void require_same_dim(const HermitianMatrix& a, const HermitianMatrix& b) {
  if (a.dim() != b.dim()) {
    throw Error(ErrorCode::DimMismatch, std::to_string(a.dim()) + " vs " + std::to_string(b.dim()));
  }
}

RVector prefix_sums(const RVector& v) {
  RVector out(v.size());
  double acc = 0.0;
  for (Eigen::Index i = 0; i < v.size(); ++i) out(i) = (acc += v(i));
  return out;
}

}  // namespace

OrderVerdict loewner_leq(const HermitianMatrix& a, const HermitianMatrix& b, double tol) {
  require_same_dim(a, b);
  const EigenSystem gap = eig(b - a);
  const Eigen::Index last = gap.values.size() - 1;
  OrderVerdict v;
  v.margin = gap.values(last);
  v.scale = unit_scale(std::max(std::abs(gap.values(0)), std::abs(gap.values(last))));
  v.holds = v.margin >= -tol * v.scale;
  if (!v.holds) v.witness_vector = gap.vectors.col(last);
  return v;
}

OrderVerdict eigen_dominance(const HermitianMatrix& a, const HermitianMatrix& b, double tol) {
  require_same_dim(a, b);
  const RVector la = eigenvalues(a);
  const RVector lb = eigenvalues(b);
  const RVector diff = lb - la;
  OrderVerdict v;
  Eigen::Index worst = 0;
  v.margin = diff.minCoeff(&worst);
  v.scale = unit_scale(std::max(la.cwiseAbs().maxCoeff(), lb.cwiseAbs().maxCoeff()));
  v.holds = v.margin >= -tol * v.scale;
  if (!v.holds) {
    for (Eigen::Index j = 0; j < diff.size(); ++j) {
      if (diff(j) < -tol * v.scale) {
        v.witness_index = static_cast<int>(j);
        break;
      }
    }
  }
  return v;
}

MajorizationReport weak_majorization(const RVector& lambda_a, const RVector& lambda_b, double tol) {
  if (lambda_a.size() != lambda_b.size()) {
    throw Error(ErrorCode::DimMismatch, "eigenvalue vectors of different length");
  }
  MajorizationReport r;
  r.partial_sums_a = prefix_sums(lambda_a);
  r.partial_sums_b = prefix_sums(lambda_b);
  r.deficits = r.partial_sums_b - r.partial_sums_a;
  r.scale = unit_scale(std::max(r.partial_sums_a.cwiseAbs().maxCoeff(), r.partial_sums_b.cwiseAbs().maxCoeff()));
  r.holds = true;
  for (Eigen::Index k = 0; k < r.deficits.size(); ++k) {
    if (r.deficits(k) < -tol * r.scale) {
      r.holds = false;
      r.failing_k = static_cast<int>(k);
      break;
    }
  }
  return r;
}

MajorizationReport weak_majorization(const HermitianMatrix& a, const HermitianMatrix& b, double tol) {
  require_same_dim(a, b);
  return weak_majorization(eigenvalues(a), eigenvalues(b), tol);
}

OrderVerdict psd_check(const HermitianMatrix& h, double tol) {
  const RVector w = eigenvalues(h);
  OrderVerdict v;
  v.margin = w(w.size() - 1);
  v.scale = unit_scale(w.cwiseAbs().maxCoeff());
  v.holds = v.margin >= -tol * v.scale;
  return v;
}

std::optional<Matrix> unitary_witness(const HermitianMatrix& a, const HermitianMatrix& b, double tol) {
  require_same_dim(a, b);
  if (!eigen_dominance(a, b, tol).holds) return std::nullopt;
  const EigenSystem ea = eig(a);
  const EigenSystem eb = eig(b);
  // U* B U = V_A diag(lambda(B)) V_A*, which dominates V_A diag(lambda(A)) V_A* = A.
  return Matrix(eb.vectors * ea.vectors.adjoint());
}

double top_k_frame_sum(const HermitianMatrix& h, const Matrix& frame) {
  if (frame.rows() != h.dim()) {
    throw Error(ErrorCode::DimMismatch, "frame vectors have length " + std::to_string(frame.rows()));
  }
  const Matrix gram = frame.adjoint() * frame;
  const double dev = (gram - Matrix::Identity(frame.cols(), frame.cols())).cwiseAbs().maxCoeff();
  if (dev > 1e-8) {
    throw Error(ErrorCode::NotOrthonormal, "frame Gram matrix deviates from I by " + std::to_string(dev));
  }
  return (frame.adjoint() * h.matrix() * frame).trace().real();
}

double top_k_eigen_sum(const HermitianMatrix& h, int k) {
  if (k < 1 || k > h.dim()) throw Error(ErrorCode::BadParams, "k outside 1..n");
  return eigenvalues(h).head(k).sum();
}

KyFanScanReport ky_fan_dominance_scan(const HermitianMatrix& a, const HermitianMatrix& b, double tol) {
  require_same_dim(a, b);
  for (const HermitianMatrix* m : {&a, &b}) {
    const OrderVerdict psd = psd_check(*m, tol);
    if (!psd.holds) {
      throw Error(ErrorCode::NotPSD, "lambda_min = " + std::to_string(psd.margin));
    }
  }
  KyFanScanReport out;
  out.majorization = weak_majorization(a, b, tol);
  const RVector sa = singular_values(a);
  const RVector sb = singular_values(b);
  const double scale = out.majorization.scale;
  out.norms_ordered = true;
  out.agree = true;
  for (int k = 1; k <= a.dim(); ++k) {
    KyFanScanEntry e;
    e.k = k;
    e.norm_a = ui_norm_from_singular_values(sa, NormSpec::ky_fan(k));
    e.norm_b = ui_norm_from_singular_values(sb, NormSpec::ky_fan(k));
    e.norm_ordered = e.norm_b - e.norm_a >= -tol * scale;
    e.partial_sum_ordered = out.majorization.deficits(k - 1) >= -tol * scale;
    out.norms_ordered = out.norms_ordered && e.norm_ordered;
    out.agree = out.agree && (e.norm_ordered == e.partial_sum_ordered);
    out.entries.push_back(e);
  }
  out.agree = out.agree && (out.norms_ordered == out.majorization.holds);
  return out;
}

}  // namespace hhmat
