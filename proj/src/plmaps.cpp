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

#include "hhmat/plmaps.hpp"

#include <fstream>
#include <numeric>
#include <sstream>

#include "hhmat/json_io.hpp"

namespace hhmat {

PositiveLinearMap PositiveLinearMap::identity(int n) {
  if (n < 1) throw Error(ErrorCode::BadParams, "identity map needs n >= 1");
  return PositiveLinearMap(Kind::Identity, n, n);
}

PositiveLinearMap PositiveLinearMap::compression(Matrix v) {
  if (v.cols() < 1 || v.cols() > v.rows()) {
    throw Error(ErrorCode::BadParams, "compression needs an n×m isometry with 1 <= m <= n");
  }
  const double dev = op_norm(Matrix(v.adjoint() * v - Matrix::Identity(v.cols(), v.cols())));
  if (dev > 1e-10) throw Error(ErrorCode::BadParams, "compression columns are not orthonormal");
  PositiveLinearMap phi(Kind::Compression, static_cast<int>(v.rows()), static_cast<int>(v.cols()));
  phi.factors_.push_back(std::move(v));
  return phi;
}

PositiveLinearMap PositiveLinearMap::compress_leading(int n, int k) {
  if (k < 1 || k > n) throw Error(ErrorCode::BadParams, "compress:k needs 1 <= k <= n");
  return compression(Matrix::Identity(n, k));
}

PositiveLinearMap PositiveLinearMap::pinching(std::vector<int> block_sizes) {
  if (block_sizes.empty()) throw Error(ErrorCode::BadParams, "pinching needs at least one block");
  for (int b : block_sizes)
    if (b < 1) throw Error(ErrorCode::BadParams, "pinching block sizes must be positive");
  const int n = std::accumulate(block_sizes.begin(), block_sizes.end(), 0);
  PositiveLinearMap phi(Kind::Pinching, n, n);
  phi.blocks_ = std::move(block_sizes);
  return phi;
}

PositiveLinearMap PositiveLinearMap::congruence_sum(std::vector<Matrix> factors) {
  if (factors.empty()) throw Error(ErrorCode::BadParams, "congruence sum needs at least one factor");
  const auto n = factors.front().rows();
  const auto m = factors.front().cols();
  for (const auto& x : factors) {
    if (x.rows() != n || x.cols() != m) {
      throw Error(ErrorCode::DimMismatch, "congruence factors must share one n×m shape");
    }
  }
  if (n < 1 || m < 1) throw Error(ErrorCode::BadParams, "empty congruence factor");
  PositiveLinearMap phi(Kind::CongruenceSum, static_cast<int>(n), static_cast<int>(m));
  phi.factors_ = std::move(factors);
  return phi;
}

std::string PositiveLinearMap::descriptor() const {
  std::ostringstream os;
  switch (kind_) {
    case Kind::Identity: os << "identity"; break;
    case Kind::Compression: os << "compress:" << target_dim_; break;
    case Kind::Pinching:
      os << "pinch:";
      for (std::size_t i = 0; i < blocks_.size(); ++i) os << (i ? "," : "") << blocks_[i];
      break;
    case Kind::CongruenceSum: os << "congruence[" << factors_.size() << "]"; break;
    case Kind::BlockDiagonalSum:
      os << "blocksum(";
      for (std::size_t i = 0; i < parts_.size(); ++i) os << (i ? "," : "") << parts_[i].descriptor();
      os << ")";
      break;
  }
  return os.str();
}

HermitianMatrix apply_map(const PositiveLinearMap& phi, const HermitianMatrix& a) {
  if (a.dim() != phi.source_dim()) {
    throw Error(ErrorCode::DimMismatch, phi.descriptor() + " expects dimension " +
                                            std::to_string(phi.source_dim()) + ", got " +
                                            std::to_string(a.dim()));
  }
  using Kind = PositiveLinearMap::Kind;
  switch (phi.kind()) {
    case Kind::Identity: return a;
    case Kind::Compression: return a.congruence(phi.factors().front());
    case Kind::Pinching: {
      Matrix out = Matrix::Zero(a.dim(), a.dim());
      int offset = 0;
      for (int size : phi.blocks()) {
        out.block(offset, offset, size, size) = a.matrix().block(offset, offset, size, size);
        offset += size;
      }
      return HermitianMatrix::symmetrize(out);
    }
    case Kind::CongruenceSum: {
      Matrix out = Matrix::Zero(phi.target_dim(), phi.target_dim());
      for (const auto& x : phi.factors()) out += x.adjoint() * a.matrix() * x;
      return HermitianMatrix::symmetrize(out);
    }
    case Kind::BlockDiagonalSum: {
      Matrix out = Matrix::Zero(phi.target_dim(), phi.target_dim());
      int offset = 0;
      for (const auto& part : phi.parts()) {
        const int size = part.source_dim();
        const HermitianMatrix block =
            HermitianMatrix::symmetrize(a.matrix().block(offset, offset, size, size));
        out += apply_map(part, block).matrix();
        offset += size;
      }
      return HermitianMatrix::symmetrize(out);
    }
  }
  throw Error(ErrorCode::BadParams, "unhandled map kind");
}

std::string_view to_string(Unitality u) {
  switch (u) {
    case Unitality::Unital: return "unital";
    case Unitality::Subunital: return "subunital";
    case Unitality::Neither: return "neither";
  }
  return "neither";
}

UnitalityReport classify_unitality(const HermitianMatrix& image) {
  UnitalityReport r;
  const RVector w = eigenvalues(image);
  r.lambda_max = w(0);
  r.lambda_min = w(w.size() - 1);
  r.deviation = op_norm(image - HermitianMatrix::identity(image.dim()));
  if (r.deviation <= 1e-10) {
    r.status = Unitality::Unital;
  } else if (r.lambda_max <= 1.0 + 1e-10 && r.lambda_min > 1e-12) {
    r.status = Unitality::Subunital;
  } else {
    r.status = Unitality::Neither;
  }
  return r;
}

UnitalityReport unitality_status(const PositiveLinearMap& phi) {
  return classify_unitality(apply_map(phi, HermitianMatrix::identity(phi.source_dim())));
}

PositiveLinearMap diag_block_map(std::vector<PositiveLinearMap> maps) {
  if (maps.empty()) throw Error(ErrorCode::BadParams, "diag_block_map needs at least one map");
  if (maps.size() == 1) return std::move(maps.front());
  const int m = maps.front().target_dim();
  int n = 0;
  for (const auto& phi : maps) {
    if (phi.target_dim() != m) {
      throw Error(ErrorCode::TargetDimMismatch, "maps target " + std::to_string(m) + " and " +
                                                    std::to_string(phi.target_dim()));
    }
    n += phi.source_dim();
  }
  PositiveLinearMap psi(PositiveLinearMap::Kind::BlockDiagonalSum, n, m);
  psi.parts_ = std::move(maps);
  return psi;
}

HermitianMatrix block_diagonal(const std::vector<HermitianMatrix>& blocks) {
  int n = 0;
  for (const auto& b : blocks) n += b.dim();
  Matrix out = Matrix::Zero(n, n);
  int offset = 0;
  for (const auto& b : blocks) {
    out.block(offset, offset, b.dim(), b.dim()) = b.matrix();
    offset += b.dim();
  }
  return HermitianMatrix::symmetrize(out);
}

namespace {

std::vector<int> parse_int_list(const std::string& text) {
  std::vector<int> out;
  std::stringstream ss(text);
  std::string item;
  while (std::getline(ss, item, ',')) {
    try {
      out.push_back(std::stoi(item));
    } catch (const std::logic_error&) {
      throw Error(ErrorCode::BadParams, "bad integer '" + item + "'");
    }
  }
  return out;
}

}  // namespace

PositiveLinearMap parse_map(const std::string& descriptor, int n) {
  const auto colon = descriptor.find(':');
  const std::string head = descriptor.substr(0, colon);
  const std::string arg = colon == std::string::npos ? "" : descriptor.substr(colon + 1);
  if (head == "identity") return PositiveLinearMap::identity(n);
  if (head == "compress") {
    const auto ks = parse_int_list(arg);
    if (ks.size() != 1) throw Error(ErrorCode::BadParams, "compress:k takes one integer");
    return PositiveLinearMap::compress_leading(n, ks.front());
  }
  if (head == "pinch") {
    auto blocks = parse_int_list(arg);
    PositiveLinearMap phi = PositiveLinearMap::pinching(std::move(blocks));
    if (phi.source_dim() != n) {
      throw Error(ErrorCode::DimMismatch, "pinch blocks sum to " + std::to_string(phi.source_dim()) +
                                              ", dimension is " + std::to_string(n));
    }
    return phi;
  }
  if (head == "congruence") {
    std::ifstream in(arg);
    if (!in) throw Error(ErrorCode::BadInput, "cannot open congruence factor file '" + arg + "'");
    Json j;
    try {
      in >> j;
    } catch (const Json::exception& e) {
      throw Error(ErrorCode::BadInput, std::string("congruence file: ") + e.what());
    }
    const Json& list = j.is_object() && j.contains("factors") ? j.at("factors") : j;
    if (!list.is_array()) throw Error(ErrorCode::BadInput, "congruence file must hold a list of matrices");
    std::vector<Matrix> factors;
    for (const auto& item : list) factors.push_back(general_matrix_from_json(item));
    PositiveLinearMap phi = PositiveLinearMap::congruence_sum(std::move(factors));
    if (phi.source_dim() != n) {
      throw Error(ErrorCode::DimMismatch, "congruence factors have " + std::to_string(phi.source_dim()) +
                                              " rows, dimension is " + std::to_string(n));
    }
    return phi;
  }
  throw Error(ErrorCode::UnknownName, "unknown map descriptor '" + descriptor + "'");
}

}  // namespace hhmat
