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

#include "hhmat/exact.hpp"

#include <cctype>
#include <limits>

namespace hhmat::exact {

namespace {

std::int64_t parse_int(const std::string& digits, const std::string& whole) {
  if (digits.empty()) throw Error(ErrorCode::BadInput, "not a rational: '" + whole + "'");
  for (char c : digits) {
    if (!std::isdigit(static_cast<unsigned char>(c))) {
      throw Error(ErrorCode::BadInput, "not a rational: '" + whole + "'");
    }
  }
  if (digits.size() > 18) throw Error(ErrorCode::BadInput, "rational too large: '" + whole + "'");
  return std::stoll(digits);
}

}  // namespace

Rational parse_rational(const std::string& text) {
  std::string s = text;
  bool negative = false;
  if (!s.empty() && (s[0] == '-' || s[0] == '+')) {
    negative = s[0] == '-';
    s = s.substr(1);
  }
  Rational q;
  if (const auto slash = s.find('/'); slash != std::string::npos) {
    const std::int64_t den = parse_int(s.substr(slash + 1), text);
    if (den == 0) throw Error(ErrorCode::BadInput, "zero denominator in '" + text + "'");
    q = Rational(parse_int(s.substr(0, slash), text), den);
  } else if (const auto dot = s.find('.'); dot != std::string::npos) {
    const std::string int_part = s.substr(0, dot);
    const std::string frac_part = s.substr(dot + 1);
    if (int_part.empty() && frac_part.empty()) throw Error(ErrorCode::BadInput, "not a rational: '" + text + "'");
    std::int64_t scale = 1;
    for (std::size_t i = 0; i < frac_part.size(); ++i) scale *= 10;
    const std::int64_t whole = int_part.empty() ? 0 : parse_int(int_part, text);
    const std::int64_t frac = frac_part.empty() ? 0 : parse_int(frac_part, text);
    q = Rational(whole) + Rational(frac, scale);
  } else {
    q = Rational(parse_int(s, text));
  }
  return negative ? -q : q;
}

std::string to_string(const Rational& q) {
  if (q.denominator() == 1) return std::to_string(q.numerator());
  return std::to_string(q.numerator()) + "/" + std::to_string(q.denominator());
}

RationalMatrix::RationalMatrix(std::initializer_list<std::initializer_list<Rational>> rows)
    : RationalMatrix(static_cast<int>(rows.size())) {
  int i = 0;
  for (const auto& row : rows) {
    if (static_cast<int>(row.size()) != n_) throw Error(ErrorCode::NonSquare, "ragged rational matrix");
    int j = 0;
    for (const auto& v : row) (*this)(i, j++) = v;
    ++i;
  }
}

RationalMatrix RationalMatrix::identity(int n) {
  RationalMatrix m(n);
  for (int i = 0; i < n; ++i) m(i, i) = 1;
  return m;
}

RationalMatrix operator+(const RationalMatrix& x, const RationalMatrix& y) {
  if (x.n_ != y.n_) throw Error(ErrorCode::DimMismatch, "rational sum");
  RationalMatrix out(x.n_);
  for (std::size_t i = 0; i < x.a_.size(); ++i) out.a_[i] = x.a_[i] + y.a_[i];
  return out;
}

RationalMatrix operator-(const RationalMatrix& x, const RationalMatrix& y) {
  if (x.n_ != y.n_) throw Error(ErrorCode::DimMismatch, "rational difference");
  RationalMatrix out(x.n_);
  for (std::size_t i = 0; i < x.a_.size(); ++i) out.a_[i] = x.a_[i] - y.a_[i];
  return out;
}

RationalMatrix operator*(const RationalMatrix& x, const RationalMatrix& y) {
  if (x.n_ != y.n_) throw Error(ErrorCode::DimMismatch, "rational product");
  const int n = x.n_;
  RationalMatrix out(n);
  for (int i = 0; i < n; ++i)
    for (int j = 0; j < n; ++j) {
      Rational acc(0);
      for (int k = 0; k < n; ++k) acc += x(i, k) * y(k, j);
      out(i, j) = acc;
    }
  return out;
}

RationalMatrix operator*(const Rational& s, const RationalMatrix& x) {
  RationalMatrix out(x.n_);
  for (std::size_t i = 0; i < x.a_.size(); ++i) out.a_[i] = s * x.a_[i];
  return out;
}

HermitianMatrix RationalMatrix::to_hermitian() const {
  Matrix m(n_, n_);
  for (int i = 0; i < n_; ++i)
    for (int j = 0; j < n_; ++j) m(i, j) = to_double((*this)(i, j));
  return hermitian_from(m);
}

std::vector<std::vector<std::string>> RationalMatrix::to_strings() const {
  std::vector<std::vector<std::string>> out(n_, std::vector<std::string>(n_));
  for (int i = 0; i < n_; ++i)
    for (int j = 0; j < n_; ++j) out[i][j] = exact::to_string((*this)(i, j));
  return out;
}

Rational determinant(const RationalMatrix& m) {
  const int n = m.dim();
  RationalMatrix w = m;
  Rational det(1);
  for (int col = 0; col < n; ++col) {
    int pivot = -1;
    for (int r = col; r < n; ++r) {
      if (w(r, col).numerator() != 0) {
        pivot = r;
        break;
      }
    }
    if (pivot < 0) return Rational(0);
    if (pivot != col) {
      for (int c = 0; c < n; ++c) std::swap(w(pivot, c), w(col, c));
      det = -det;
    }
    det *= w(col, col);
    for (int r = col + 1; r < n; ++r) {
      const Rational factor = w(r, col) / w(col, col);
      for (int c = col; c < n; ++c) w(r, c) -= factor * w(col, c);
    }
  }
  return det;
}

std::optional<int> negative_leading_minor(const RationalMatrix& m) {
  const int n = m.dim();
  RationalMatrix w = m;
  for (int k = 0; k < n; ++k) {
    // Pivot k equals D_{k+1} / D_k with all earlier pivots positive.
    if (w(k, k).numerator() < 0) return k + 1;
    if (w(k, k).numerator() == 0) return std::nullopt;
    for (int r = k + 1; r < n; ++r) {
      const Rational factor = w(r, k) / w(k, k);
      for (int c = k; c < n; ++c) w(r, c) -= factor * w(k, c);
    }
  }
  return std::nullopt;
}

Rational beta_weight(int r, int j) {
  // j! (r-j)! / (r+1)! = 1 / ((r+1) * C(r, j))
  std::int64_t binom = 1;
  for (int i = 1; i <= j; ++i) binom = binom * (r - j + i) / i;
  return Rational(1, (r + 1) * binom);
}

}  // namespace hhmat::exact
