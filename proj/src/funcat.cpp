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

#include "hhmat/funcat.hpp"

#include <cmath>
#include <limits>
#include <sstream>

#include "hhmat/random.hpp"

namespace hhmat {

std::string_view to_string(Flag f) {
  switch (f) {
    case Flag::True: return "true";
    case Flag::False: return "false";
    case Flag::Unknown: return "unknown";
  }
  return "unknown";
}

namespace {

constexpr double kInf = std::numeric_limits<double>::infinity();

std::string format_number(double x) {
  if (std::isinf(x)) return x > 0 ? "inf" : "-inf";
  std::ostringstream os;
  os.precision(17);
  os << x;
  return os.str();
}

double parse_number(const std::string& s) {
  if (s == "inf" || s == "+inf") return kInf;
  if (s == "-inf") return -kInf;
  std::size_t used = 0;
  const double v = std::stod(s, &used);
  if (used != s.size()) throw std::invalid_argument(s);
  return v;
}

Flag flag_of(bool b) { return b ? Flag::True : Flag::False; }

}  // namespace

Interval Interval::real_line() { return {-kInf, kInf, true, true}; }

Interval Interval::parse(const std::string& text) {
  const auto comma = text.find(',');
  if (comma == std::string::npos) throw Error(ErrorCode::BadInterval, "expected 'a,b', got '" + text + "'");
  Interval out;
  try {
    out = closed(parse_number(text.substr(0, comma)), parse_number(text.substr(comma + 1)));
  } catch (const std::logic_error&) {
    throw Error(ErrorCode::BadInterval, "unparseable interval '" + text + "'");
  }
  out.lo_open = std::isinf(out.lo);
  out.hi_open = std::isinf(out.hi);
  if (!(out.lo < out.hi)) throw Error(ErrorCode::BadInterval, "empty interval '" + text + "'");
  return out;
}

bool Interval::bounded() const { return std::isfinite(lo) && std::isfinite(hi); }

bool Interval::contains(double x) const { return contains(x, 0.0); }

bool Interval::contains(double x, double slack) const {
  if (std::isnan(x)) return false;
  const bool above = lo_open ? x > lo : x >= lo - slack;
  const bool below = hi_open ? x < hi : x <= hi + slack;
  return above && below;
}

bool Interval::contains(const Interval& other) const {
  const bool lo_ok = other.lo > lo || (other.lo == lo && (!lo_open || other.lo_open));
  const bool hi_ok = other.hi < hi || (other.hi == hi && (!hi_open || other.hi_open));
  return lo_ok && hi_ok;
}

std::string Interval::str() const {
  return std::string(lo_open ? "(" : "[") + format_number(lo) + ", " + format_number(hi) +
         (hi_open ? ")" : "]");
}

ScalarFunction ScalarFunction::restricted_to(const Interval& sub) const {
  if (!domain_.contains(sub)) {
    throw Error(ErrorCode::BadInterval, sub.str() + " is not inside the domain " + domain_.str());
  }
  return ScalarFunction(name_, eval_, sub, flags_);
}

ScalarFunction builtin(const std::string& name, const std::vector<double>& params) {
  const Interval half_line{0.0, kInf, false, true};
  const Interval open_half_line{0.0, kInf, true, true};
  auto want = [&](std::size_t count) {
    if (params.size() != count) {
      throw Error(ErrorCode::BadParams, name + " takes " + std::to_string(count) + " parameter(s), got " +
                                            std::to_string(params.size()));
    }
    for (double v : params) {
      if (!std::isfinite(v)) throw Error(ErrorCode::BadParams, name + ": non-finite parameter");
    }
  };

  if (name == "power") {
    want(1);
    const double r = params[0];
    if (r < 1.0) {
      throw Error(ErrorCode::BadParams, "power r=" + format_number(r) + " < 1 is not convex on [0,inf)");
    }
    const long double rl = r;
    FunctionFlags flags{Flag::True, Flag::True, Flag::False, flag_of(r <= 2.0), Flag::True};
    return ScalarFunction("power:" + format_number(r), [rl](long double x) { return std::pow(x, rl); },
                          half_line, flags);
  }
  if (name == "exp") {
    want(0);
    return ScalarFunction("exp", [](long double x) { return std::exp(x); }, Interval::real_line(),
                          {Flag::True, Flag::True, Flag::True, Flag::False, Flag::False});
  }
  if (name == "identity") {
    want(0);
    return ScalarFunction("identity", [](long double x) { return x; }, Interval::real_line(),
                          {Flag::True, Flag::True, Flag::False, Flag::True, Flag::True});
  }
  if (name == "cube") {
    want(0);
    return ScalarFunction("cube", [](long double x) { return x * x * x; }, half_line,
                          {Flag::True, Flag::True, Flag::False, Flag::False, Flag::True});
  }
  if (name == "neg_sqrt") {
    want(0);
    return ScalarFunction("neg_sqrt", [](long double x) { return -std::sqrt(x); }, half_line,
                          {Flag::True, Flag::False, Flag::False, Flag::True, Flag::True});
  }
  if (name == "inverse") {
    want(0);
    return ScalarFunction("inverse", [](long double x) { return 1.0L / x; }, open_half_line,
                          {Flag::True, Flag::False, Flag::True, Flag::True, Flag::Unknown});
  }
  if (name == "xlogx") {
    want(0);
    return ScalarFunction("xlogx", [](long double x) { return x == 0.0L ? 0.0L : x * std::log(x); },
                          half_line, {Flag::True, Flag::False, Flag::False, Flag::True, Flag::True});
  }
  if (name == "affine") {
    want(2);
    const long double a = params[0];
    const long double b = params[1];
    FunctionFlags flags{Flag::True, flag_of(a >= 0), flag_of(a == 0 && b > 0), Flag::True,
                        flag_of(b <= 0)};
    return ScalarFunction("affine:" + format_number(params[0]) + "," + format_number(params[1]),
                          [a, b](long double x) { return a * x + b; }, Interval::real_line(), flags);
  }
  throw Error(ErrorCode::UnknownName, "no catalog function '" + name + "'");
}

ScalarFunction parse_function(const std::string& descriptor) {
  const auto colon = descriptor.find(':');
  const std::string name = descriptor.substr(0, colon);
  std::vector<double> params;
  if (colon != std::string::npos) {
    std::stringstream rest(descriptor.substr(colon + 1));
    std::string item;
    while (std::getline(rest, item, ',')) {
      try {
        params.push_back(parse_number(item));
      } catch (const std::logic_error&) {
        throw Error(ErrorCode::BadParams, "bad parameter '" + item + "' in '" + descriptor + "'");
      }
    }
  }
  return builtin(name, params);
}

std::vector<ScalarFunction> catalog() {
  return {builtin("identity"), builtin("power", {1.5}), builtin("power", {2}), builtin("power", {4}),
          builtin("cube"),     builtin("exp"),          builtin("neg_sqrt"),    builtin("inverse"),
          builtin("xlogx"),    builtin("affine", {2, 1})};
}

bool FlagReport::contradicted() const {
  for (const auto& c : checks)
    if (c.contradicted()) return true;
  return false;
}

const FlagCheck* FlagReport::find(const std::string& flag) const {
  for (const auto& c : checks)
    if (c.flag == flag) return &c;
  return nullptr;
}

namespace {

std::string describe_contradictions(const FlagReport& r) {
  std::ostringstream os;
  os << r.function << " on " << r.interval.str() << ":";
  for (const auto& c : r.checks) {
    if (!c.contradicted()) continue;
    os << " " << c.flag;
    if (!c.witness_points.empty()) {
      os << " at";
      for (double x : c.witness_points) os << ' ' << x;
    }
    if (c.matrix_witness) os << " (matrix pair, margin " << c.matrix_witness->margin << ")";
  }
  return os.str();
}

HermitianMatrix probe_matrix(int d, const Interval& iv, Rng& rng) {
  // Half of the eigenvalues pinned to an endpoint: extreme spectra find
  // operator-convexity failures far more often than uniform ones.
  RVector eigs(d);
  for (int i = 0; i < d; ++i) {
    const double u = rng.uniform();
    if (u < 0.25) eigs(i) = iv.lo;
    else if (u < 0.5) eigs(i) = iv.hi;
    else eigs(i) = rng.uniform(iv.lo, iv.hi);
  }
  const Matrix q = random_unitary(d, rng);
  return HermitianMatrix::symmetrize(q * eigs.asDiagonal() * q.adjoint());
}

}  // namespace

FlagContradictedError::FlagContradictedError(FlagReport report)
    : Error(ErrorCode::FlagContradicted, describe_contradictions(report)), report_(std::move(report)) {}

std::optional<OperatorConvexityWitness> search_operator_convexity_witness(const ScalarFunction& f,
                                                                          const Interval& interval,
                                                                          int trials, std::uint64_t seed) {
  if (!interval.bounded()) throw Error(ErrorCode::BadInterval, "operator-convexity probe needs a compact interval");
  Rng rng(seed);
  std::optional<OperatorConvexityWitness> worst;
  for (int trial = 0; trial < trials; ++trial) {
    const int d = 2 + trial % 2;
    const HermitianMatrix a = probe_matrix(d, interval, rng);
    const HermitianMatrix b = probe_matrix(d, interval, rng);
    const double lambda = trial % 3 == 0 ? 0.5 : rng.uniform(0.05, 0.95);
    const HermitianMatrix mixed_value = lambda * apply_function(f, a) + (1.0 - lambda) * apply_function(f, b);
    const HermitianMatrix value_of_mix = apply_function(f, lambda * a + (1.0 - lambda) * b);
    const double margin = lambda_min(mixed_value - value_of_mix);
    const double tol = 1e-10 * unit_scale(op_norm(mixed_value));
    if (margin < -tol && (!worst || margin < worst->margin)) {
      worst = OperatorConvexityWitness{a, b, lambda, margin};
    }
  }
  return worst;
}

FlagReport validate_flags(const ScalarFunction& f, const Interval& interval, int grid_points,
                          const FlagValidationOptions& options) {
  if (!interval.bounded() || !(interval.lo < interval.hi)) {
    throw Error(ErrorCode::BadInterval, "flag validation needs a compact interval, got " + interval.str());
  }
  if (!f.domain().contains(interval)) {
    throw Error(ErrorCode::BadInterval, interval.str() + " is not inside the domain " + f.domain().str());
  }
  if (grid_points < 3) throw Error(ErrorCode::BadParams, "grid_points must be at least 3");

  const FunctionFlags claims = options.claims.value_or(f.flags());
  const double a = interval.lo;
  const double b = interval.hi;
  std::vector<double> xs(grid_points);
  std::vector<double> fx(grid_points);
  for (int i = 0; i < grid_points; ++i) {
    xs[i] = i + 1 == grid_points ? b : a + (b - a) * i / (grid_points - 1);
    fx[i] = f(xs[i]);
  }
  double scale = 1.0;
  for (double v : fx)
    if (std::isfinite(v)) scale = std::max(scale, std::abs(v));
  const double tol = 1e-10 * scale;

  FlagReport report{f.name(), interval, {}};
  Rng rng(options.seed);

  FlagCheck finite{"finite", Flag::True, true, false, {}, std::nullopt};
  for (int i = 0; i < grid_points && !finite.witness_found; ++i) {
    if (!std::isfinite(fx[i])) {
      finite.witness_found = true;
      finite.witness_points = {xs[i]};
    }
  }
  report.checks.push_back(finite);

  FlagCheck convex{"convex", claims.convex, true, false, {}, std::nullopt};
  for (int i = 1; i + 1 < grid_points && !convex.witness_found; ++i) {
    const double mid = f(0.5 * (xs[i - 1] + xs[i + 1]));
    if (mid > 0.5 * (fx[i - 1] + fx[i + 1]) + tol) {
      convex.witness_found = true;
      convex.witness_points = {xs[i - 1], xs[i + 1]};
    }
  }
  for (int i = 0; i < options.random_pairs && !convex.witness_found; ++i) {
    const double s = rng.uniform(a, b);
    const double t = rng.uniform(a, b);
    if (f(0.5 * (s + t)) > 0.5 * (f(s) + f(t)) + tol) {
      convex.witness_found = true;
      convex.witness_points = {s, t};
    }
  }
  report.checks.push_back(convex);

  FlagCheck increasing{"increasing", claims.increasing, true, false, {}, std::nullopt};
  for (int i = 0; i + 1 < grid_points && !increasing.witness_found; ++i) {
    if (fx[i] > fx[i + 1] + tol) {
      increasing.witness_found = true;
      increasing.witness_points = {xs[i], xs[i + 1]};
    }
  }
  for (int i = 0; i < options.random_pairs && !increasing.witness_found; ++i) {
    double s = rng.uniform(a, b);
    double t = rng.uniform(a, b);
    if (s > t) std::swap(s, t);
    if (f(s) > f(t) + tol) {
      increasing.witness_found = true;
      increasing.witness_points = {s, t};
    }
  }
  report.checks.push_back(increasing);

  FlagCheck positive{"positive", claims.positive, true, false, {}, std::nullopt};
  for (int i = 0; i < grid_points && !positive.witness_found; ++i) {
    if (!(fx[i] > 0.0)) {
      positive.witness_found = true;
      positive.witness_points = {xs[i]};
    }
  }
  report.checks.push_back(positive);

  FlagCheck f0{"f0_nonpositive", claims.f0_nonpositive, f.domain().contains(0.0), false, {}, std::nullopt};
  if (f0.tested && f(0.0) > tol) {
    f0.witness_found = true;
    f0.witness_points = {0.0};
  }
  report.checks.push_back(f0);

  FlagCheck opconv{"operator_convex", claims.operator_convex, true, false, {}, std::nullopt};
  // Declared-false entries get twice the budget: the search is directed at
  // producing a witness.
  const int trials = claims.operator_convex == Flag::True ? options.operator_trials : 2 * options.operator_trials;
  if (auto w = search_operator_convexity_witness(f, interval, trials, mix_seed(options.seed, 1))) {
    opconv.witness_found = true;
    opconv.matrix_witness = std::move(w);
  }
  report.checks.push_back(opconv);

  if (report.contradicted()) throw FlagContradictedError(report);
  return report;
}

}  // namespace hhmat
