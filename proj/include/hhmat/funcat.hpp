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
#include <functional>
#include <optional>
#include <string>
#include <vector>

#include "hhmat/errors.hpp"
#include "hhmat/matcore.hpp"

namespace hhmat {

/// Declared analytic property of a catalog function.
enum class Flag { True, False, Unknown };

std::string_view to_string(Flag f);

struct FunctionFlags {
  Flag convex = Flag::Unknown;
  Flag increasing = Flag::Unknown;
  Flag positive = Flag::Unknown;  // f > 0 on the whole domain
  Flag operator_convex = Flag::Unknown;
  Flag f0_nonpositive = Flag::Unknown;
};

/// Real interval, possibly open at either end and possibly unbounded.
struct Interval {
  double lo = 0.0;
  double hi = 0.0;
  bool lo_open = false;
  bool hi_open = false;

  static Interval closed(double a, double b) { return {a, b, false, false}; }
  static Interval real_line();
  /// Parses "a,b" (closed).
  static Interval parse(const std::string& text);

  bool bounded() const;
  double length() const { return hi - lo; }
  bool contains(double x) const;
  /// Containment with the closed ends stretched by `slack`. Open ends are strict.
  bool contains(double x, double slack) const;
  bool contains(const Interval& other) const;
  std::string str() const;
};

/// Evaluatable real function with a domain and declared flags.
///
/// Evaluation runs in long double internally; the double overload is what
/// matrix code uses, the extended one is for the Mond–Pečarić maximization.
class ScalarFunction {
 public:
  using Eval = std::function<long double(long double)>;

  ScalarFunction(std::string name, Eval eval, Interval domain, FunctionFlags flags)
      : name_(std::move(name)), eval_(std::move(eval)), domain_(domain), flags_(flags) {}

  const std::string& name() const { return name_; }
  const Interval& domain() const { return domain_; }
  const FunctionFlags& flags() const { return flags_; }

  double operator()(double x) const { return static_cast<double>(eval_(x)); }
  long double eval_extended(long double x) const { return eval_(x); }

  /// Same function, same flags, narrower domain.
  ScalarFunction restricted_to(const Interval& sub) const;

 private:
  std::string name_;
  Eval eval_;
  Interval domain_;
  FunctionFlags flags_;
};

/// Catalog lookup: power(r), exp, identity, cube, neg_sqrt, inverse, xlogx,
/// affine(a,b). Throws UnknownName or BadParams.
ScalarFunction builtin(const std::string& name, const std::vector<double>& params = {});

/// Parses a CLI descriptor: "exp", "power:1.5", "affine:2,1".
ScalarFunction parse_function(const std::string& descriptor);

/// Every catalog entry with representative parameters.
std::vector<ScalarFunction> catalog();

struct OperatorConvexityWitness {
  HermitianMatrix a;
  HermitianMatrix b;
  double lambda = 0.5;
  /// lambda_min(lambda f(A) + (1-lambda) f(B) - f(lambda A + (1-lambda) B)); negative.
  double margin = 0.0;
};

struct FlagCheck {
  std::string flag;
  Flag claimed = Flag::Unknown;
  bool tested = false;
  /// True when a counterexample to the flag was found.
  bool witness_found = false;
  std::vector<double> witness_points;
  std::optional<OperatorConvexityWitness> matrix_witness;

  /// A declared-true flag with a counterexample.
  bool contradicted() const { return claimed == Flag::True && witness_found; }
};

struct FlagReport {
  std::string function;
  Interval interval;
  std::vector<FlagCheck> checks;

  bool contradicted() const;
  const FlagCheck* find(const std::string& flag) const;
};

class FlagContradictedError : public Error {
 public:
  explicit FlagContradictedError(FlagReport report);
  const FlagReport& report() const { return report_; }

 private:
  FlagReport report_;
};

struct FlagValidationOptions {
  std::uint64_t seed = 0x5eed;
  int random_pairs = 2000;
  int operator_trials = 3000;
  /// Overrides the declared flags, e.g. to ask whether cube is operator convex.
  std::optional<FunctionFlags> claims;
};

/// Spot-checks every flag on [a,b] ⊆ domain. Declared-true flags are searched
/// for counterexamples (throws FlagContradictedError when one is found);
/// declared-false flags get a directed witness search, recorded in the report.
FlagReport validate_flags(const ScalarFunction& f, const Interval& interval, int grid_points,
                          const FlagValidationOptions& options = {});

/// Random search for a pair violating the operator-convexity inequality on
/// 2×2 and 3×3 Hermitian matrices with spectra in `interval`.
std::optional<OperatorConvexityWitness> search_operator_convexity_witness(
    const ScalarFunction& f, const Interval& interval, int trials, std::uint64_t seed);

}  // namespace hhmat
