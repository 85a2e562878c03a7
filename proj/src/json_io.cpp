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

#include "hhmat/json_io.hpp"

#include <cmath>
#include <limits>

namespace hhmat {

namespace {

double entry_value(const Json& e) {
  if (e.is_number()) return e.get<double>();
  if (e.is_string()) return exact::to_double(exact::parse_rational(e.get<std::string>()));
  throw Error(ErrorCode::BadInput, "matrix entry must be a number or a rational string");
}

Json grid_to_json(const Matrix& m, bool imag) {
  Json rows = Json::array();
  for (Eigen::Index i = 0; i < m.rows(); ++i) {
    Json row = Json::array();
    for (Eigen::Index j = 0; j < m.cols(); ++j) row.push_back(imag ? m(i, j).imag() : m(i, j).real());
    rows.push_back(std::move(row));
  }
  return rows;
}

void read_grid(const Json& rows, Matrix& out, bool imag) {
  if (!rows.is_array() || static_cast<Eigen::Index>(rows.size()) != out.rows()) {
    throw Error(ErrorCode::BadInput, "matrix rows do not match the declared shape");
  }
  for (Eigen::Index i = 0; i < out.rows(); ++i) {
    const Json& row = rows[i];
    if (!row.is_array() || static_cast<Eigen::Index>(row.size()) != out.cols()) {
      throw Error(ErrorCode::BadInput, "matrix row " + std::to_string(i) + " has the wrong length");
    }
    for (Eigen::Index j = 0; j < out.cols(); ++j) {
      const double v = entry_value(row[j]);
      out(i, j) = imag ? Complex(out(i, j).real(), v) : Complex(v, out(i, j).imag());
    }
  }
}

Json bound_to_json(double x) {
  if (std::isinf(x)) return x > 0 ? "inf" : "-inf";
  return x;
}

double bound_from_json(const Json& j) {
  if (j.is_string()) {
    const auto s = j.get<std::string>();
    if (s == "inf" || s == "+inf") return std::numeric_limits<double>::infinity();
    if (s == "-inf") return -std::numeric_limits<double>::infinity();
    return exact::to_double(exact::parse_rational(s));
  }
  return j.get<double>();
}

Json spec_label(const NormSpec& s) { return s.label(); }

}  // namespace

Json matrix_to_json(const Matrix& m) {
  Json j;
  j["n"] = m.rows();
  if (m.cols() != m.rows()) j["m"] = m.cols();
  j["re"] = grid_to_json(m, false);
  if (m.imag().cwiseAbs().maxCoeff() > 0.0) j["im"] = grid_to_json(m, true);
  return j;
}

Json matrix_to_json(const HermitianMatrix& h) { return matrix_to_json(h.matrix()); }

Matrix general_matrix_from_json(const Json& j) {
  if (!j.is_object() || !j.contains("re")) throw Error(ErrorCode::BadInput, "matrix literal needs \"re\"");
  const Json& re = j.at("re");
  if (!re.is_array()) throw Error(ErrorCode::BadInput, "\"re\" must be a list of rows");
  const Eigen::Index rows = j.contains("n") ? j.at("n").get<Eigen::Index>() : static_cast<Eigen::Index>(re.size());
  Eigen::Index cols = rows;
  if (j.contains("m")) {
    cols = j.at("m").get<Eigen::Index>();
  } else if (!re.empty() && re[0].is_array()) {
    cols = static_cast<Eigen::Index>(re[0].size());
  }
  if (rows < 1 || cols < 1) throw Error(ErrorCode::BadInput, "empty matrix literal");
  Matrix m = Matrix::Zero(rows, cols);
  read_grid(re, m, false);
  if (j.contains("im")) read_grid(j.at("im"), m, true);
  return m;
}

HermitianMatrix matrix_from_json(const Json& j) { return hermitian_from(general_matrix_from_json(j)); }

Json matrix_to_json(const exact::RationalMatrix& m) {
  return Json{{"n", m.dim()}, {"re", m.to_strings()}};
}

exact::RationalMatrix rational_matrix_from_json(const Json& j) {
  const Json& re = j.at("re");
  const int n = static_cast<int>(re.size());
  exact::RationalMatrix out(n);
  for (int i = 0; i < n; ++i) {
    if (!re[i].is_array() || static_cast<int>(re[i].size()) != n) throw Error(ErrorCode::NonSquare, "rational literal");
    for (int k = 0; k < n; ++k) {
      const Json& e = re[i][k];
      out(i, k) = e.is_string() ? exact::parse_rational(e.get<std::string>())
                                : exact::Rational(e.get<std::int64_t>());
    }
  }
  return out;
}

Json vector_to_json(const RVector& v) { return std::vector<double>(v.data(), v.data() + v.size()); }

Json vector_to_json(const CVector& v) {
  Json re = Json::array();
  Json im = Json::array();
  for (Eigen::Index i = 0; i < v.size(); ++i) {
    re.push_back(v(i).real());
    im.push_back(v(i).imag());
  }
  return Json{{"re", re}, {"im", im}};
}

CVector cvector_from_json(const Json& j) {
  const Json& re = j.at("re");
  CVector v(static_cast<Eigen::Index>(re.size()));
  for (std::size_t i = 0; i < re.size(); ++i) v(i) = Complex(entry_value(re[i]), 0.0);
  if (j.contains("im")) {
    const Json& im = j.at("im");
    if (im.size() != re.size()) throw Error(ErrorCode::BadInput, "vector re/im lengths differ");
    for (std::size_t i = 0; i < im.size(); ++i) v(i) = Complex(v(i).real(), entry_value(im[i]));
  }
  return v;
}

Json interval_to_json(const Interval& i) {
  Json j{{"lo", bound_to_json(i.lo)}, {"hi", bound_to_json(i.hi)}};
  if (i.lo_open) j["lo_open"] = true;
  if (i.hi_open) j["hi_open"] = true;
  return j;
}

Interval interval_from_json(const Json& j) {
  if (j.is_string()) return Interval::parse(j.get<std::string>());
  Interval i;
  i.lo = bound_from_json(j.at("lo"));
  i.hi = bound_from_json(j.at("hi"));
  i.lo_open = j.value("lo_open", false);
  i.hi_open = j.value("hi_open", false);
  return i;
}

Json map_to_json(const PositiveLinearMap& phi) {
  using Kind = PositiveLinearMap::Kind;
  Json j{{"n", phi.source_dim()}, {"m", phi.target_dim()}};
  switch (phi.kind()) {
    case Kind::Identity:
      j["kind"] = "identity";
      break;
    case Kind::Compression:
      j["kind"] = "compression";
      j["factors"] = Json::array({matrix_to_json(phi.factors().front())});
      break;
    case Kind::Pinching:
      j["kind"] = "pinching";
      j["blocks"] = phi.blocks();
      break;
    case Kind::CongruenceSum: {
      j["kind"] = "congruence";
      Json factors = Json::array();
      for (const auto& x : phi.factors()) factors.push_back(matrix_to_json(x));
      j["factors"] = std::move(factors);
      break;
    }
    case Kind::BlockDiagonalSum: {
      j["kind"] = "block_diagonal";
      Json parts = Json::array();
      for (const auto& p : phi.parts()) parts.push_back(map_to_json(p));
      j["parts"] = std::move(parts);
      break;
    }
  }
  return j;
}

PositiveLinearMap map_from_json(const Json& j) {
  if (j.is_string()) {
    throw Error(ErrorCode::BadInput, "map descriptor strings need a dimension; use the structural form");
  }
  const std::string kind = j.at("kind").get<std::string>();
  auto factors = [&] {
    std::vector<Matrix> out;
    for (const auto& f : j.at("factors")) out.push_back(general_matrix_from_json(f));
    return out;
  };
  if (kind == "identity") return PositiveLinearMap::identity(j.at("n").get<int>());
  if (kind == "compression") return PositiveLinearMap::compression(factors().at(0));
  if (kind == "pinching") return PositiveLinearMap::pinching(j.at("blocks").get<std::vector<int>>());
  if (kind == "congruence") return PositiveLinearMap::congruence_sum(factors());
  if (kind == "block_diagonal") {
    std::vector<PositiveLinearMap> parts;
    for (const auto& p : j.at("parts")) parts.push_back(map_from_json(p));
    return diag_block_map(std::move(parts));
  }
  throw Error(ErrorCode::UnknownName, "map kind '" + kind + "'");
}

Json to_json(const OrderVerdict& v) {
  Json j{{"holds", v.holds},
         {"margin", v.margin},
         {"scale", v.scale},
         {"normalized_margin", v.normalized_margin()},
         {"deficits", Json::array()}};
  if (v.witness_vector) j["witness_vector"] = vector_to_json(*v.witness_vector);
  if (v.witness_index) j["witness_index"] = *v.witness_index;
  return j;
}

Json to_json(const MajorizationReport& r) {
  Json j{{"holds", r.holds},
         {"margin", r.deficits.size() ? r.min_deficit() : 0.0},
         {"scale", r.scale},
         {"deficits", vector_to_json(r.deficits)},
         {"partial_sums_lhs", vector_to_json(r.partial_sums_a)},
         {"partial_sums_rhs", vector_to_json(r.partial_sums_b)}};
  if (r.failing_k) j["failing_k"] = *r.failing_k;
  return j;
}

Json to_json(const ChainReport& r) {
  Json links = Json::array();
  for (const auto& l : r.links) {
    Json verdict = std::visit([](const auto& v) { return to_json(v); }, l.result);
    links.push_back(Json{{"from", l.from}, {"to", l.to}, {"verdict", std::move(verdict)}});
  }
  Json terms = Json::array();
  for (const auto& t : r.terms) terms.push_back(matrix_to_json(t));
  return Json{{"holds", r.holds}, {"labels", r.labels}, {"terms", std::move(terms)}, {"links", std::move(links)}};
}

Json to_json(const NormComparison& c) {
  return Json{{"norm", spec_label(c.spec)}, {"lhs", c.lhs}, {"rhs", c.rhs}, {"holds", c.holds}};
}

Json to_json(const AlphaResult& a) {
  return Json{{"alpha", a.alpha}, {"argmax_t", a.argmax_t}, {"omega", a.omega}, {"Omega", a.Omega}};
}

Json to_json(const RefinementChainReport& r) {
  return Json{{"k", r.k}, {"p", r.p}, {"holds", r.holds}, {"chain", to_json(r.chain)}, {"outer", to_json(r.outer)}};
}

Json to_json(const CounterexampleReport& r) {
  return Json{{"A", matrix_to_json(r.a)},
              {"B", matrix_to_json(r.b)},
              {"left", matrix_to_json(r.left)},
              {"middle", matrix_to_json(r.middle)},
              {"right", matrix_to_json(r.right)},
              {"left_matches", r.left_matches},
              {"middle_matches", r.middle_matches},
              {"right_matches", r.right_matches},
              {"left_gap", matrix_to_json(r.left_gap)},
              {"right_gap", matrix_to_json(r.right_gap)},
              {"left_gap_det", exact::to_string(r.left_gap_det)},
              {"right_gap_det", exact::to_string(r.right_gap_det)},
              {"left_inequality_fails", r.left_inequality_fails},
              {"right_inequality_fails", r.right_inequality_fails},
              {"quadrature_deviation", r.quadrature_deviation},
              {"holds", r.holds()}};
}

Json to_json(const FlagReport& r) {
  Json checks = Json::array();
  for (const auto& c : r.checks) {
    Json j{{"flag", c.flag},
           {"claimed", std::string(to_string(c.claimed))},
           {"tested", c.tested},
           {"witness_found", c.witness_found},
           {"contradicted", c.contradicted()}};
    if (!c.witness_points.empty()) j["witness_points"] = c.witness_points;
    if (c.matrix_witness) {
      j["matrix_witness"] = Json{{"A", matrix_to_json(c.matrix_witness->a)},
                                 {"B", matrix_to_json(c.matrix_witness->b)},
                                 {"lambda", c.matrix_witness->lambda},
                                 {"margin", c.matrix_witness->margin}};
    }
    checks.push_back(std::move(j));
  }
  return Json{{"function", r.function},
              {"interval", interval_to_json(r.interval)},
              {"contradicted", r.contradicted()},
              {"checks", std::move(checks)}};
}

}  // namespace hhmat
