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

#include <doctest.h>

#include "hhmat/matcore.hpp"

namespace hhmat::test {

inline double max_abs_diff(const Matrix& a, const Matrix& b) { return (a - b).cwiseAbs().maxCoeff(); }

inline double max_abs_diff(const HermitianMatrix& a, const HermitianMatrix& b) {
  return max_abs_diff(a.matrix(), b.matrix());
}

/// Max entrywise difference relative to max(1, largest entry of b).
inline double rel_diff(const HermitianMatrix& a, const HermitianMatrix& b) {
  return max_abs_diff(a, b) / unit_scale(b.max_abs_entry());
}

}  // namespace hhmat::test
