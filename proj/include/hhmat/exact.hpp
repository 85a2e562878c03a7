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
#include <string>
#include <vector>

#include <boost/rational.hpp>

#include "hhmat/matcore.hpp"

namespace hhmat::exact {

using Rational = boost::rational<std::int64_t>;

/// Parses "7", "-1.75", "31/6".
Rational parse_rational(const std::string& text);
std::string to_string(const Rational& q);
inline double to_double(const Rational& q) {
  return static_cast<double>(q.numerator()) / static_cast<double>(q.denominator());
}

/// Small dense square matrix over the rationals. Real symmetric use only.
class RationalMatrix {
 public:
  RationalMatrix() = default;
  explicit RationalMatrix(int n) : n_(n), a_(static_cast<std::size_t>(n) * n, Rational(0)) {}
  RationalMatrix(std::initializer_list<std::initializer_list<Rational>> rows);

  static RationalMatrix identity(int n);

  int dim() const { return n_; }
  Rational& operator()(int i, int j) { return a_[static_cast<std::size_t>(i) * n_ + j]; }
  const Rational& operator()(int i, int j) const { return a_[static_cast<std::size_t>(i) * n_ + j]; }

  friend RationalMatrix operator+(const RationalMatrix& x, const RationalMatrix& y);
  friend RationalMatrix operator-(const RationalMatrix& x, const RationalMatrix& y);
  friend RationalMatrix operator*(const RationalMatrix& x, const RationalMatrix& y);
  friend RationalMatrix operator*(const Rational& s, const RationalMatrix& x);
  friend bool operator==(const RationalMatrix& x, const RationalMatrix& y) = default;

  RationalMatrix& operator+=(const RationalMatrix& y) { return *this = *this + y; }

  HermitianMatrix to_hermitian() const;
  std::vector<std::vector<std::string>> to_strings() const;

 private:
  int n_ = 0;
  std::vector<Rational> a_;
};

Rational determinant(const RationalMatrix& m);

/// Exact definiteness certificate by symmetric elimination. Returns the
/// (1-based) order of the first leading principal minor that is negative
/// while all earlier ones are positive, which certifies a negative eigenvalue.
/// nullopt when elimination reaches a zero pivot or every pivot is positive.
std::optional<int> negative_leading_minor(const RationalMatrix& m);

/// Beta integral int_0^1 t^j (1-t)^(r-j) dt = j! (r-j)! / (r+1)!.
Rational beta_weight(int r, int j);

/// int_0^1 (tA + (1-t)B)^r dt expanded over all words w in {A,B}^r. Each word
/// with j letters A carries weight beta_weight(r, j). Exponential in r.
template <class Mat, class Weight>
Mat word_expansion_integral(int r, const Mat& a, const Mat& b, const Mat& identity, Weight weight) {
  const std::uint32_t words = 1u << r;
  Mat total = identity;
  bool first = true;
  for (std::uint32_t w = 0; w < words; ++w) {
    Mat product = identity;
    int count_a = 0;
    for (int pos = 0; pos < r; ++pos) {
      if ((w >> pos) & 1u) {
        product = product * a;
        ++count_a;
      } else {
        product = product * b;
      }
    }
    Mat term = weight(r, count_a) * product;
    if (first) {
      total = term;
      first = false;
    } else {
      total = total + term;
    }
  }
  return total;
}

}  // namespace hhmat::exact
