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

#include "hhmat/harness.hpp"

#include <algorithm>
#include <atomic>
#include <chrono>
#include <cmath>
#include <exception>
#include <limits>
#include <map>
#include <mutex>
#include <sstream>
#include <thread>

#include "hhmat/hhcheck.hpp"

namespace hhmat {

namespace {

Matrix gaussian(int rows, int cols, Rng& rng) {
  Matrix g(rows, cols);
  for (int j = 0; j < cols; ++j)
    for (int i = 0; i < rows; ++i) g(i, j) = rng.complex_normal();
  return g;
}

/// Three Gaussian factors normalized by S^{-1/2}, S = sum X_i* X_i, so that
/// the congruence sum is unital; then scaled by sqrt(c).
PositiveLinearMap random_congruence(int n, int m, double c, Rng& rng) {
  std::vector<Matrix> factors;
  Matrix s = Matrix::Zero(m, m);
  for (int i = 0; i < 3; ++i) {
    factors.push_back(gaussian(n, m, rng));
    s += factors.back().adjoint() * factors.back();
  }
  const HermitianMatrix inv_sqrt =
      apply_spectral(eig(HermitianMatrix::symmetrize(s)), [](double x) { return 1.0 / std::sqrt(x); });
  for (auto& x : factors) x = std::sqrt(c) * x * inv_sqrt.matrix();
  return PositiveLinearMap::congruence_sum(std::move(factors));
}

std::vector<int> random_blocks(int n, Rng& rng) {
  std::vector<int> sizes;
  int left = n;
  while (left > 0) {
    sizes.push_back(rng.integer(1, left));
    left -= sizes.back();
  }
  return sizes;
}

bool is_skip(ErrorCode c) {
  switch (c) {
    case ErrorCode::HypothesisUnmet:
    case ErrorCode::NotConvexFlag:
    case ErrorCode::NotOperatorConvexFlag:
    case ErrorCode::NotPSD:
    case ErrorCode::NotPositive:
    case ErrorCode::SpectrumOutOfDomain:
      return true;
    default:
      return false;
  }
}

bool is_numeric_failure(ErrorCode c) {
  return c == ErrorCode::ConvergenceFailure || c == ErrorCode::NoConvergence;
}

CheckOptions options_of(const Instance& inst) { return CheckOptions{inst.tol, inst.quad}; }

const HermitianMatrix& matrix_at(const Instance& inst, std::size_t i) {
  if (inst.matrices.size() <= i) throw Error(ErrorCode::BadInput, inst.theorem + " instance is missing a matrix");
  return inst.matrices[i];
}

const PositiveLinearMap& map_at(const Instance& inst) {
  if (inst.maps.empty()) throw Error(ErrorCode::BadInput, inst.theorem + " instance is missing its map");
  return inst.maps.front();
}

TrialOutcome outcome(const Instance& inst, bool holds, double margin, Json details,
                     std::string hypothesis = {}) {
  TrialOutcome o;
  o.trial = inst.trial;
  o.seed = inst.seed;
  o.verdict = holds ? Verdict::Pass : Verdict::Fail;
  o.margin = margin;
  o.report = Json{{"theorem", inst.theorem},
                  {"hypotheses", hypothesis},
                  {"verdict", std::string(to_string(o.verdict))},
                  {"margin", margin},
                  {"instance_seed", inst.seed},
                  {"details", std::move(details)}};
  return o;
}

Json comparisons_json(const std::vector<NormComparison>& cs) {
  Json out = Json::array();
  for (const auto& c : cs) out.push_back(to_json(c));
  return out;
}

std::vector<NormSpec> default_norms(int m) {
  std::vector<NormSpec> specs;
  for (int k = 1; k <= m; ++k) specs.push_back(NormSpec::ky_fan(k));
  specs.push_back(NormSpec::schatten(1.0));
  specs.push_back(NormSpec::schatten(2.0));
  specs.push_back(NormSpec::schatten(3.5));
  specs.push_back(NormSpec::op());
  return specs;
}

Instance base_instance(const std::string& theorem, const InstanceSpec& spec, int trial, std::uint64_t seed) {
  Instance inst;
  inst.theorem = theorem;
  inst.trial = trial;
  inst.seed = seed;
  inst.function = spec.function;
  inst.interval = spec.interval;
  inst.tol = spec.tol;
  inst.quad = spec.quad;
  return inst;
}

/// One map from spec.map and the matrices A, B drawn in the interval.
Instance map_pair_instance(const std::string& theorem, const InstanceSpec& spec, int trial, std::uint64_t seed) {
  Instance inst = base_instance(theorem, spec, trial, seed);
  Rng rng(seed);
  inst.maps.push_back(make_map(spec.map, spec.n, spec.m, rng));
  inst.matrices.push_back(random_hermitian(spec.n, spec.interval, rng));
  inst.matrices.push_back(random_hermitian(spec.n, spec.interval, rng));
  return inst;
}

TheoremEntry scalar_entry() {
  TheoremEntry e;
  e.id = "scalar";
  e.generate = [](const InstanceSpec& spec, int trial, std::uint64_t seed) {
    Instance inst = base_instance("scalar", spec, trial, seed);
    Rng rng(seed);
    double x = rng.uniform(spec.interval.lo, spec.interval.hi);
    double y = rng.uniform(spec.interval.lo, spec.interval.hi);
    if (x > y) std::swap(x, y);
    inst.matrices.push_back(HermitianMatrix::diagonal(std::vector<double>{x}));
    inst.matrices.push_back(HermitianMatrix::diagonal(std::vector<double>{y}));
    return inst;
  };
  e.evaluate = [](const Instance& inst) {
    const ChainReport r = check_scalar_hh(parse_function(inst.function), matrix_at(inst, 0)(0, 0).real(),
                                          matrix_at(inst, 1)(0, 0).real(), options_of(inst));
    return outcome(inst, r.holds, r.worst_margin(), to_json(r));
  };
  return e;
}

TheoremEntry jensen_entry() {
  TheoremEntry e;
  e.id = "jensen";
  e.generate = [](const InstanceSpec& spec, int trial, std::uint64_t seed) {
    Instance inst = base_instance("jensen", spec, trial, seed);
    Rng rng(seed);
    inst.maps.push_back(make_map(spec.map, spec.n, spec.m, rng));
    inst.matrices.push_back(random_hermitian(spec.n, spec.interval, rng));
    inst.vector = random_unit_vector(inst.maps.front().target_dim(), rng);
    return inst;
  };
  e.evaluate = [](const Instance& inst) {
    if (!inst.vector) throw Error(ErrorCode::BadInput, "jensen instance is missing its vector");
    const JensenReport r =
        check_jensen_map(parse_function(inst.function), map_at(inst), matrix_at(inst, 0), *inst.vector, options_of(inst));
    return outcome(inst, r.verdict.holds, r.verdict.normalized_margin(),
                   Json{{"lhs", r.lhs}, {"rhs", r.rhs}, {"verdict", to_json(r.verdict)}},
                   std::string(to_string(r.hypothesis)));
  };
  return e;
}

TheoremEntry t1_entry() {
  TheoremEntry e;
  e.id = "t1";
  e.generate = [](const InstanceSpec& spec, int trial, std::uint64_t seed) {
    return map_pair_instance("t1", spec, trial, seed);
  };
  e.evaluate = [](const Instance& inst) {
    const MajorizationCheck r = check_theorem_t1(parse_function(inst.function), map_at(inst), matrix_at(inst, 0),
                                                 matrix_at(inst, 1), options_of(inst));
    return outcome(inst, r.report.holds, r.report.normalized_margin(), to_json(r.report),
                   std::string(to_string(r.hypothesis)));
  };
  return e;
}

TheoremEntry trace_entry() {
  TheoremEntry e;
  e.id = "trace";
  e.generate = [](const InstanceSpec& spec, int trial, std::uint64_t seed) {
    Instance inst = base_instance("trace", spec, trial, seed);
    Rng rng(seed);
    inst.matrices.push_back(random_hermitian(spec.n, spec.interval, rng));
    inst.matrices.push_back(random_hermitian(spec.n, spec.interval, rng));
    return inst;
  };
  e.evaluate = [](const Instance& inst) {
    const TraceReport r =
        check_trace_corollary(parse_function(inst.function), matrix_at(inst, 0), matrix_at(inst, 1), options_of(inst));
    return outcome(inst, r.verdict.holds, r.verdict.normalized_margin(),
                   Json{{"lhs", r.lhs}, {"rhs", r.rhs}, {"verdict", to_json(r.verdict)}});
  };
  return e;
}

TheoremEntry power_norm_entry() {
  TheoremEntry e;
  e.id = "power_norm";
  e.generate = [](const InstanceSpec& spec, int trial, std::uint64_t seed) {
    Instance inst = map_pair_instance("power_norm", spec, trial, seed);
    inst.r = 2.0;
    if (spec.function.rfind("power:", 0) == 0) inst.r = std::stod(spec.function.substr(6));
    inst.norms = default_norms(inst.maps.front().target_dim());
    return inst;
  };
  e.evaluate = [](const Instance& inst) {
    const NormComparisonReport r = check_power_norm_corollary(inst.r, map_at(inst), matrix_at(inst, 0),
                                                              matrix_at(inst, 1), inst.norms, options_of(inst));
    return outcome(inst, r.holds, r.worst_margin(), Json{{"r", inst.r}, {"comparisons", comparisons_json(r.comparisons)}},
                   std::string(to_string(r.hypothesis)));
  };
  return e;
}

TheoremEntry bourin_entry() {
  TheoremEntry e;
  e.id = "bourin";
  // k blocks of an isometry W ((k n) x m) give congruences with sum V_i* V_i = I.
  e.generate = [](const InstanceSpec& spec, int trial, std::uint64_t seed) {
    Instance inst = base_instance("bourin", spec, trial, seed);
    Rng rng(seed);
    int k = spec.k > 0 ? spec.k : rng.integer(1, 3);
    while (k * spec.n < spec.m) ++k;
    const double c = spec.map == "random-subunital" ? rng.uniform(0.2, 0.9) : 1.0;
    const Matrix w = std::sqrt(c) * random_isometry(k * spec.n, spec.m, rng);
    for (int i = 0; i < k; ++i) {
      inst.maps.push_back(PositiveLinearMap::congruence_sum({w.middleRows(i * spec.n, spec.n)}));
      inst.matrices.push_back(random_hermitian(spec.n, spec.interval, rng));
    }
    inst.k = k;
    return inst;
  };
  e.evaluate = [](const Instance& inst) {
    const BourinReport r = check_bourin_t2(parse_function(inst.function), inst.maps, inst.matrices, options_of(inst));
    double margin = r.dominance.normalized_margin();
    if (r.witness_check) margin = std::min(margin, r.witness_check->normalized_margin());
    Json details{{"dominance", to_json(r.dominance)}, {"witness_unitary", r.witness_unitary}};
    if (r.witness_check) details["witness_check"] = to_json(*r.witness_check);
    if (r.witness) details["witness"] = matrix_to_json(*r.witness);
    return outcome(inst, r.holds, margin, std::move(details), std::string(to_string(r.hypothesis)));
  };
  return e;
}

TheoremEntry t3_entry() {
  TheoremEntry e;
  e.id = "t3";
  e.generate = [](const InstanceSpec& spec, int trial, std::uint64_t seed) {
    Instance inst = map_pair_instance("t3", spec, trial, seed);
    const int m = inst.maps.front().target_dim();
    inst.unitary = Matrix::Identity(m, m);
    return inst;
  };
  e.evaluate = [](const Instance& inst) {
    const Matrix u = inst.unitary ? *inst.unitary
                                  : Matrix::Identity(map_at(inst).target_dim(), map_at(inst).target_dim());
    const ConditionalChainReport r = check_theorem_t3(parse_function(inst.function), map_at(inst), matrix_at(inst, 0),
                                                      matrix_at(inst, 1), u, default_t_grid(), options_of(inst));
    return outcome(inst, r.dominance.holds, r.dominance.normalized_margin(), to_json(r.conclusion),
                   std::string(to_string(r.map_hypothesis)));
  };
  return e;
}

TheoremEntry t4_entry() {
  TheoremEntry e;
  e.id = "t4";
  e.generate = [](const InstanceSpec& spec, int trial, std::uint64_t seed) {
    return map_pair_instance("t4", spec, trial, seed);
  };
  e.evaluate = [](const Instance& inst) {
    const MondPecaricReport r = check_theorem_t4(parse_function(inst.function), map_at(inst), matrix_at(inst, 0),
                                                 matrix_at(inst, 1), inst.interval, options_of(inst));
    return outcome(inst, r.verdict.holds, r.verdict.normalized_margin(),
                   Json{{"alpha", to_json(r.alpha)}, {"verdict", to_json(r.verdict)}}, "unital");
  };
  return e;
}

TheoremEntry chain_entry() {
  TheoremEntry e;
  e.id = "chain";
  e.generate = [](const InstanceSpec& spec, int trial, std::uint64_t seed) {
    Instance inst = base_instance("chain", spec, trial, seed);
    Rng rng(seed);
    inst.matrices.push_back(random_hermitian(spec.n, spec.interval, rng));
    inst.matrices.push_back(random_hermitian(spec.n, spec.interval, rng));
    inst.k = spec.k > 0 ? spec.k : rng.integer(1, 3);
    inst.p = spec.p > 0 ? spec.p : rng.integer(1, 2);
    return inst;
  };
  e.evaluate = [](const Instance& inst) {
    const RefinementChainReport r = check_refinement_chain(parse_function(inst.function), matrix_at(inst, 0),
                                                           matrix_at(inst, 1), inst.k, inst.p, options_of(inst));
    return outcome(inst, r.holds, std::min(r.chain.worst_margin(), r.outer.normalized_margin()), to_json(r));
  };
  return e;
}

TheoremEntry norm_chain_entry() {
  TheoremEntry e;
  e.id = "norm_chain";
  e.generate = [](const InstanceSpec& spec, int trial, std::uint64_t seed) {
    Instance inst = map_pair_instance("norm_chain", spec, trial, seed);
    inst.norms = default_norms(inst.maps.front().target_dim());
    return inst;
  };
  e.evaluate = [](const Instance& inst) {
    const NormChainReport r = check_norm_chain_corollary(parse_function(inst.function), map_at(inst),
                                                         matrix_at(inst, 0), matrix_at(inst, 1), inst.interval,
                                                         inst.norms, options_of(inst));
    Json details{{"first", comparisons_json(r.first)}, {"second", comparisons_json(r.second)}};
    if (r.alpha) details["alpha"] = to_json(*r.alpha);
    if (!r.first_checked()) details["first_skip_reason"] = r.first_skip_reason;
    if (!r.second_checked()) details["second_skip_reason"] = r.second_skip_reason;
    if (!r.first_checked() && !r.second_checked()) {
      TrialOutcome o = outcome(inst, true, 0.0, std::move(details), std::string(to_string(r.hypothesis)));
      o.verdict = Verdict::Skip;
      o.note = r.first_skip_reason + "; " + r.second_skip_reason;
      o.report["verdict"] = "skip";
      return o;
    }
    return outcome(inst, r.holds, r.worst_margin(), std::move(details), std::string(to_string(r.hypothesis)));
  };
  return e;
}

TheoremEntry counterexample_entry() {
  TheoremEntry e;
  e.id = "counterexample";
  e.single_instance = true;
  e.generate = [](const InstanceSpec& spec, int trial, std::uint64_t seed) {
    Instance inst = base_instance("counterexample", spec, trial, seed);
    inst.function = "cube";
    return inst;
  };
  e.evaluate = [](const Instance& inst) {
    const CounterexampleReport r = reproduce_counterexample();
    return outcome(inst, r.holds(), 0.0, to_json(r));
  };
  return e;
}

struct Registry {
  std::mutex mu;
  std::map<std::string, TheoremEntry> entries;
  std::vector<std::string> order;

  Registry() {
    for (auto make : {scalar_entry, jensen_entry, t1_entry, trace_entry, power_norm_entry, bourin_entry, t3_entry,
                      t4_entry, chain_entry, norm_chain_entry, counterexample_entry}) {
      TheoremEntry e = make();
      order.push_back(e.id);
      entries.emplace(e.id, std::move(e));
    }
  }
};

Registry& registry() {
  static Registry r;
  return r;
}

TrialOutcome evaluate_guarded(const TheoremEntry& entry, const Instance& inst) {
  try {
    return entry.evaluate(inst);
  } catch (const Error& e) {
    if (!is_skip(e.code()) && !is_numeric_failure(e.code())) throw;
    TrialOutcome o;
    o.trial = inst.trial;
    o.seed = inst.seed;
    o.verdict = is_skip(e.code()) ? Verdict::Skip : Verdict::Fail;
    o.margin = 0.0;
    o.note = e.what();
    o.report = Json{{"theorem", inst.theorem},
                    {"hypotheses", "unmet"},
                    {"verdict", std::string(to_string(o.verdict))},
                    {"margin", 0.0},
                    {"instance_seed", inst.seed},
                    {"error", e.what()}};
    return o;
  }
}

Json quad_to_json(const QuadratureSpec& q) {
  return Json{{"nodes", q.nodes}, {"refine", q.refine}, {"rtol", q.rtol}};
}

QuadratureSpec quad_from_json(const Json& j) {
  QuadratureSpec q;
  q.nodes = j.value("nodes", q.nodes);
  q.refine = j.value("refine", q.refine);
  q.rtol = j.value("rtol", q.rtol);
  return q;
}

}  // namespace

PositiveLinearMap make_map(const std::string& descriptor, int n, int m, Rng& rng) {
  if (descriptor == "random") {
    static const char* kinds[] = {"identity", "random-compress", "random-pinch", "random-congruence"};
    return make_map(kinds[rng.integer(0, 3)], n, m, rng);
  }
  if (descriptor == "random-compress") return PositiveLinearMap::compression(random_isometry(n, std::min(n, m), rng));
  if (descriptor == "random-pinch") return PositiveLinearMap::pinching(random_blocks(n, rng));
  if (descriptor == "random-congruence") return random_congruence(n, m, 1.0, rng);
  if (descriptor == "random-subunital") return random_congruence(n, m, rng.uniform(0.2, 0.9), rng);
  return parse_map(descriptor, n);
}

void validate(const InstanceSpec& spec) {
  if (spec.n < 1 || spec.m < 1) throw Error(ErrorCode::BadParams, "dimensions must be positive");
  if (!(spec.interval.lo < spec.interval.hi)) throw Error(ErrorCode::BadParams, "empty interval");
  if (spec.trials < 1) throw Error(ErrorCode::BadParams, "trial count must be at least 1");
  if (spec.k < 0 || spec.p < 0) throw Error(ErrorCode::BadParams, "k and p must be non-negative");
  if (spec.workers < 0) throw Error(ErrorCode::BadParams, "worker count must be non-negative");
}

Json instance_to_json(const Instance& inst) {
  Json maps = Json::array();
  for (const auto& m : inst.maps) maps.push_back(map_to_json(m));
  Json matrices = Json::array();
  for (const auto& a : inst.matrices) matrices.push_back(matrix_to_json(a));
  Json norms = Json::array();
  for (const auto& s : inst.norms) norms.push_back(s.label());
  Json j{{"theorem", inst.theorem},
         {"trial", inst.trial},
         {"seed", inst.seed},
         {"function", inst.function},
         {"interval", interval_to_json(inst.interval)},
         {"tol", inst.tol},
         {"quad", quad_to_json(inst.quad)},
         {"maps", std::move(maps)},
         {"matrices", std::move(matrices)},
         {"k", inst.k},
         {"p", inst.p},
         {"r", inst.r},
         {"norms", std::move(norms)}};
  if (inst.vector) j["vector"] = vector_to_json(*inst.vector);
  if (inst.unitary) j["unitary"] = matrix_to_json(*inst.unitary);
  return j;
}

Instance instance_from_json(const Json& j) {
  try {
    Instance inst;
    inst.theorem = j.at("theorem").get<std::string>();
    inst.trial = j.value("trial", 0);
    inst.seed = j.value("seed", std::uint64_t{0});
    inst.function = j.value("function", std::string("power:2"));
    inst.interval = j.contains("interval") ? interval_from_json(j.at("interval")) : Interval::closed(0.0, 2.0);
    inst.tol = j.value("tol", kDefaultTol);
    if (j.contains("quad")) inst.quad = quad_from_json(j.at("quad"));
    for (const auto& m : j.value("maps", Json::array())) inst.maps.push_back(map_from_json(m));
    for (const auto& a : j.value("matrices", Json::array())) inst.matrices.push_back(matrix_from_json(a));
    if (j.contains("vector")) inst.vector = cvector_from_json(j.at("vector"));
    if (j.contains("unitary")) inst.unitary = general_matrix_from_json(j.at("unitary"));
    inst.k = j.value("k", 0);
    inst.p = j.value("p", 0);
    inst.r = j.value("r", 0.0);
    for (const auto& s : j.value("norms", Json::array())) inst.norms.push_back(NormSpec::parse(s.get<std::string>()));
    return inst;
  } catch (const Json::exception& e) {
    throw Error(ErrorCode::BadInput, std::string("malformed instance: ") + e.what());
  }
}

std::string_view to_string(Verdict v) {
  switch (v) {
    case Verdict::Pass:
      return "pass";
    case Verdict::Skip:
      return "skip";
    case Verdict::Fail:
      return "fail";
  }
  return "?";
}

std::vector<std::string> theorem_ids() {
  Registry& r = registry();
  std::lock_guard<std::mutex> lock(r.mu);
  return r.order;
}

const TheoremEntry& find_theorem(const std::string& id) {
  Registry& r = registry();
  std::lock_guard<std::mutex> lock(r.mu);
  auto it = r.entries.find(id);
  if (it == r.entries.end()) throw Error(ErrorCode::UnknownTheorem, "'" + id + "'");
  return it->second;
}

void register_theorem(TheoremEntry entry) {
  Registry& r = registry();
  std::lock_guard<std::mutex> lock(r.mu);
  if (!r.entries.count(entry.id)) r.order.push_back(entry.id);
  r.entries[entry.id] = std::move(entry);
}

SuiteReport run_suite(const InstanceSpec& spec, const std::string& theorem) {
  const TheoremEntry& entry = find_theorem(theorem);
  validate(spec);
  const auto start = std::chrono::steady_clock::now();

  SuiteReport report;
  report.theorem = theorem;
  report.spec = spec;
  report.trials = entry.single_instance ? 1 : spec.trials;

  std::vector<TrialOutcome> outcomes(report.trials);
  std::vector<std::optional<Json>> failing(report.trials);
  std::atomic<int> next{0};
  std::mutex error_mu;
  std::exception_ptr error;

  auto work = [&] {
    for (int t = next++; t < report.trials; t = next++) {
      try {
        const std::uint64_t seed = mix_seed(spec.seed, static_cast<std::uint64_t>(t));
        const Instance inst = entry.generate(spec, t, seed);
        outcomes[t] = evaluate_guarded(entry, inst);
        if (outcomes[t].verdict == Verdict::Fail) failing[t] = instance_to_json(inst);
      } catch (...) {
        std::lock_guard<std::mutex> lock(error_mu);
        if (!error) error = std::current_exception();
        next = report.trials;
      }
    }
  };

  int workers = spec.workers > 0 ? spec.workers : static_cast<int>(std::max(1u, std::thread::hardware_concurrency()));
  workers = std::min(workers, report.trials);
  if (workers <= 1) {
    work();
  } else {
    std::vector<std::thread> pool;
    for (int w = 0; w < workers; ++w) pool.emplace_back(work);
    for (auto& th : pool) th.join();
  }
  if (error) std::rethrow_exception(error);

  double worst = std::numeric_limits<double>::infinity();
  for (int t = 0; t < report.trials; ++t) {
    switch (outcomes[t].verdict) {
      case Verdict::Pass:
        ++report.passes;
        break;
      case Verdict::Skip:
        ++report.skips;
        break;
      case Verdict::Fail:
        ++report.failures;
        break;
    }
    if (outcomes[t].verdict != Verdict::Skip) worst = std::min(worst, outcomes[t].margin);
    if (failing[t]) report.failing_instances.push_back(std::move(*failing[t]));
  }
  report.worst_margin = std::isfinite(worst) ? worst : 0.0;
  report.outcomes = std::move(outcomes);
  report.wall_time_s = std::chrono::duration<double>(std::chrono::steady_clock::now() - start).count();
  return report;
}

TrialOutcome replay(const Json& instance) {
  const Instance inst = instance_from_json(instance);
  return evaluate_guarded(find_theorem(inst.theorem), inst);
}

Json to_json(const InstanceSpec& spec) {
  return Json{{"n", spec.n},
              {"m", spec.m},
              {"interval", interval_to_json(spec.interval)},
              {"function", spec.function},
              {"map", spec.map},
              {"trials", spec.trials},
              {"seed", spec.seed},
              {"tol", spec.tol},
              {"k", spec.k},
              {"p", spec.p},
              {"quad", quad_to_json(spec.quad)}};
}

Json to_json(const SuiteReport& report, bool include_timing) {
  Json trials = Json::array();
  for (const auto& o : report.outcomes) {
    Json t{{"trial", o.trial}, {"seed", o.seed}, {"verdict", std::string(to_string(o.verdict))}, {"margin", o.margin}};
    if (!o.note.empty()) t["note"] = o.note;
    if (o.verdict == Verdict::Fail) t["report"] = o.report;
    trials.push_back(std::move(t));
  }
  Json j{{"theorem", report.theorem},
         {"spec", to_json(report.spec)},
         {"trials", report.trials},
         {"passes", report.passes},
         {"skips", report.skips},
         {"failures", report.failures},
         {"worst_margin", report.worst_margin},
         {"outcomes", std::move(trials)},
         {"failing_instances", report.failing_instances}};
  if (include_timing) j["wall_time_s"] = report.wall_time_s;
  return j;
}

std::string to_csv(const SuiteReport& report) {
  std::ostringstream os;
  os.precision(17);
  os << "theorem,trial,seed,verdict,margin\n";
  for (const auto& o : report.outcomes) {
    os << report.theorem << ',' << o.trial << ',' << o.seed << ',' << to_string(o.verdict) << ',' << o.margin << '\n';
  }
  return os.str();
}

}  // namespace hhmat
