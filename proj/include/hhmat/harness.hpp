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

#include "hhmat/funcat.hpp"
#include "hhmat/json_io.hpp"
#include "hhmat/matcore.hpp"
#include "hhmat/plmaps.hpp"
#include "hhmat/random.hpp"
#include "hhmat/segquad.hpp"

namespace hhmat {

/// Map descriptors understood by the suites: those of parse_map plus
/// "random" (identity, compression, pinching or unital congruence),
/// "random-compress", "random-pinch", "random-congruence" (unital, 3 factors)
/// and "random-subunital" (congruence with Phi(I) = c I, 0 < c < 1).
PositiveLinearMap make_map(const std::string& descriptor, int n, int m, Rng& rng);

struct InstanceSpec {
  int n = 4;
  int m = 4;
  Interval interval = Interval::closed(0.0, 2.0);
  std::string function = "power:2";
  std::string map = "identity";
  int trials = 100;
  std::uint64_t seed = 1;
  double tol = 1e-9;
  /// Refinement-chain parameters; 0 draws k from {1,2,3} and p from {1,2}.
  int k = 0;
  int p = 0;
  /// Worker threads; 0 = hardware concurrency.
  int workers = 0;
  QuadratureSpec quad{};
};

/// Throws BadParams on n, m < 1, empty interval or trials < 1.
void validate(const InstanceSpec& spec);

/// Everything a checker call needs; serializes to replayable JSON.
struct Instance {
  std::string theorem;
  int trial = 0;
  std::uint64_t seed = 0;
  std::string function;
  Interval interval;
  double tol = 1e-9;
  QuadratureSpec quad{};
  std::vector<PositiveLinearMap> maps;
  std::vector<HermitianMatrix> matrices;
  std::optional<CVector> vector;
  std::optional<Matrix> unitary;
  int k = 0;
  int p = 0;
  double r = 0.0;
  std::vector<NormSpec> norms;
};

Json instance_to_json(const Instance& inst);
Instance instance_from_json(const Json& j);

enum class Verdict { Pass, Skip, Fail };
std::string_view to_string(Verdict v);

struct TrialOutcome {
  int trial = 0;
  std::uint64_t seed = 0;
  Verdict verdict = Verdict::Skip;
  /// Normalized margin (margin / scale); 0 for skips.
  double margin = 0.0;
  std::string note;
  /// {theorem, hypotheses, verdict, margins, instance_seed}
  Json report;
};

struct TheoremEntry {
  std::string id;
  std::function<Instance(const InstanceSpec&, int trial, std::uint64_t seed)> generate;
  std::function<TrialOutcome(const Instance&)> evaluate;
  /// Fixed single-instance theorems ignore the trial count.
  bool single_instance = false;
};

/// Built-in ids: scalar, jensen, t1, trace, power_norm, bourin, t3, t4,
/// chain, norm_chain, counterexample.
std::vector<std::string> theorem_ids();
const TheoremEntry& find_theorem(const std::string& id);
/// Adds or replaces an entry.
void register_theorem(TheoremEntry entry);

struct SuiteReport {
  std::string theorem;
  InstanceSpec spec;
  int trials = 0;
  int passes = 0;
  int skips = 0;
  int failures = 0;
  double worst_margin = 0.0;
  std::vector<TrialOutcome> outcomes;
  std::vector<Json> failing_instances;
  double wall_time_s = 0.0;
};

SuiteReport run_suite(const InstanceSpec& spec, const std::string& theorem);

/// Evaluates one serialized instance (as stored in failing_instances).
TrialOutcome replay(const Json& instance);

Json to_json(const InstanceSpec& spec);
/// Without timing the output is byte-stable for a fixed InstanceSpec and seed.
Json to_json(const SuiteReport& report, bool include_timing = true);
/// Columns: theorem,trial,seed,verdict,margin
std::string to_csv(const SuiteReport& report);

}  // namespace hhmat
