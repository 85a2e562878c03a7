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

#include <cstdio>
#include <fstream>
#include <iostream>
#include <string>

#include <CLI11.hpp>

#include "hhmat/harness.hpp"
#include "hhmat/hhcheck.hpp"
#include "hhmat/json_io.hpp"

namespace {

constexpr int kExitViolation = 1;
constexpr int kExitUsage = 2;

void write_output(const std::string& path, const std::string& text) {
  if (path == "-") {
    std::cout << text;
    return;
  }
  std::ofstream out(path);
  if (!out) throw hhmat::Error(hhmat::ErrorCode::BadInput, "cannot write '" + path + "'");
  out << text;
}

hhmat::Json read_json(const std::string& path) {
  std::ifstream in(path);
  if (!in) throw hhmat::Error(hhmat::ErrorCode::BadInput, "cannot open '" + path + "'");
  try {
    return hhmat::Json::parse(in);
  } catch (const hhmat::Json::exception& e) {
    throw hhmat::Error(hhmat::ErrorCode::BadInput, path + ": " + e.what());
  }
}

int run_replay(const std::string& path) {
  const hhmat::Json j = read_json(path);
  std::vector<hhmat::Json> instances;
  if (j.contains("failing_instances")) {
    for (const auto& inst : j.at("failing_instances")) instances.push_back(inst);
  } else if (j.is_array()) {
    for (const auto& inst : j) instances.push_back(inst);
  } else {
    instances.push_back(j);
  }
  int failures = 0;
  for (const auto& inst : instances) {
    const hhmat::TrialOutcome o = hhmat::replay(inst);
    std::printf("%s trial %d seed %llu: %s margin %.6e%s%s\n", inst.value("theorem", std::string("?")).c_str(),
                o.trial, static_cast<unsigned long long>(o.seed), std::string(hhmat::to_string(o.verdict)).c_str(),
                o.margin, o.note.empty() ? "" : " ", o.note.c_str());
    failures += o.verdict == hhmat::Verdict::Fail;
  }
  std::printf("replayed %zu instance(s), %d violation(s)\n", instances.size(), failures);
  return failures > 0 ? kExitViolation : 0;
}

bool usage_error(hhmat::ErrorCode c) {
  using hhmat::ErrorCode;
  switch (c) {
    case ErrorCode::BadParams:
    case ErrorCode::BadSpec:
    case ErrorCode::BadInterval:
    case ErrorCode::BadInput:
    case ErrorCode::UnknownName:
    case ErrorCode::UnknownTheorem:
    case ErrorCode::DimMismatch:
    case ErrorCode::TargetDimMismatch:
    case ErrorCode::RTooLarge:
      return true;
    default:
      return false;
  }
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"Checks of Hermite–Hadamard inequalities for Hermitian matrices"};
  app.require_subcommand(0, 1);
  std::string top_replay;
  app.add_option("--replay", top_replay, "Replay a failing instance or a suite report");

  hhmat::InstanceSpec spec;
  std::string theorem;
  std::string interval_text = "0,2";
  std::string json_path;
  std::string csv_path;
  int m = 0;
  bool no_refine = false;
  bool timing = false;
  auto* verify = app.add_subcommand("verify", "Run a randomized suite for one theorem id");
  verify->add_option("--theorem", theorem, "scalar, jensen, t1, trace, power_norm, bourin, t3, t4, chain, "
                                           "norm_chain, counterexample")
      ->required();
  verify->add_option("--n", spec.n, "Source dimension")->capture_default_str();
  verify->add_option("--m", m, "Target dimension (default n)");
  verify->add_option("--f", spec.function, "Function descriptor, e.g. power:2, exp, inverse")->capture_default_str();
  verify->add_option("--map", spec.map, "identity, compress:k, pinch:b1,b2, congruence:<file>, random, "
                                        "random-compress, random-pinch, random-congruence, random-subunital")
      ->capture_default_str();
  verify->add_option("--interval", interval_text, "Spectral interval a,b")->capture_default_str();
  verify->add_option("--trials", spec.trials)->capture_default_str();
  verify->add_option("--seed", spec.seed)->capture_default_str();
  verify->add_option("--tol", spec.tol, "Relative tolerance")->capture_default_str();
  verify->add_option("--k", spec.k, "Refinement base k (0 = random in 1..3)");
  verify->add_option("--p", spec.p, "Refinement depth p (0 = random in 1..2)");
  verify->add_option("--workers", spec.workers, "Worker threads (0 = all cores)");
  verify->add_option("--quad-nodes", spec.quad.nodes)->capture_default_str();
  verify->add_option("--quad-rtol", spec.quad.rtol)->capture_default_str();
  verify->add_flag("--no-refine", no_refine, "Fixed node count, no doubling");
  verify->add_option("--json", json_path, "Write the JSON report ('-' for stdout)");
  verify->add_option("--csv", csv_path, "Write per-trial margins as CSV ('-' for stdout)");
  verify->add_flag("--timing", timing, "Include wall time in the JSON report");

  std::string alpha_f = "power:2";
  std::string alpha_interval = "1,2";
  auto* alpha = app.add_subcommand("alpha", "Converse constant of f on [omega, Omega]");
  alpha->add_option("--f", alpha_f)->capture_default_str();
  alpha->add_option("--interval", alpha_interval)->capture_default_str();

  std::string chain_f = "power:2";
  std::string chain_interval = "0.5,4";
  int chain_k = 2;
  int chain_p = 2;
  int chain_n = 3;
  std::uint64_t chain_seed = 1;
  bool chain_json = false;
  auto* chain = app.add_subcommand("chain", "Refinement chain on one random positive definite pair");
  chain->add_option("--f", chain_f)->capture_default_str();
  chain->add_option("--k", chain_k)->capture_default_str();
  chain->add_option("--p", chain_p)->capture_default_str();
  chain->add_option("--n", chain_n)->capture_default_str();
  chain->add_option("--seed", chain_seed)->capture_default_str();
  chain->add_option("--interval", chain_interval)->capture_default_str();
  chain->add_flag("--json", chain_json, "Print the full report as JSON");

  bool cex_json = false;
  auto* cex = app.add_subcommand("counterexample", "Exact recomputation of the cubic counterexample");
  cex->add_flag("--json", cex_json, "Print the full report as JSON");

  std::string flags_f = "power:2";
  std::string flags_interval = "0,2";
  int flags_grid = 201;
  auto* flags = app.add_subcommand("flags", "Spot-check the declared flags of a function");
  flags->add_option("--f", flags_f)->capture_default_str();
  flags->add_option("--interval", flags_interval)->capture_default_str();
  flags->add_option("--grid", flags_grid)->capture_default_str();

  std::string replay_path;
  auto* replay = app.add_subcommand("replay", "Re-evaluate failing instances from a JSON file");
  replay->add_option("file", replay_path)->required();

  try {
    app.parse(argc, argv);
  } catch (const CLI::ParseError& e) {
    const int code = app.exit(e);
    return code == 0 ? 0 : kExitUsage;
  }

  try {
    if (!top_replay.empty()) return run_replay(top_replay);
    if (*replay) return run_replay(replay_path);

    if (*verify) {
      spec.m = m > 0 ? m : spec.n;
      spec.interval = hhmat::Interval::parse(interval_text);
      spec.quad.refine = !no_refine;
      const hhmat::SuiteReport report = hhmat::run_suite(spec, theorem);
      std::FILE* summary = json_path == "-" || csv_path == "-" ? stderr : stdout;
      std::fprintf(summary, "%s: %d trials, %d pass, %d skip, %d fail, worst margin %.6e, %.2f s\n", report.theorem.c_str(),
                  report.trials, report.passes, report.skips, report.failures, report.worst_margin,
                  report.wall_time_s);
      if (!json_path.empty()) write_output(json_path, hhmat::to_json(report, timing).dump(2) + "\n");
      if (!csv_path.empty()) write_output(csv_path, hhmat::to_csv(report));
      return report.failures > 0 ? kExitViolation : 0;
    }

    if (*alpha) {
      const hhmat::Interval iv = hhmat::Interval::parse(alpha_interval);
      const hhmat::AlphaResult r = hhmat::mond_pecaric_alpha(hhmat::parse_function(alpha_f), iv.lo, iv.hi);
      std::printf("alpha = %.15g at t = %.15g on [%g, %g]\n", r.alpha, r.argmax_t, r.omega, r.Omega);
      return 0;
    }

    if (*chain) {
      const hhmat::Interval iv = hhmat::Interval::parse(chain_interval);
      hhmat::Rng rng(chain_seed);
      const hhmat::HermitianMatrix a = hhmat::random_hermitian(chain_n, iv, rng);
      const hhmat::HermitianMatrix b = hhmat::random_hermitian(chain_n, iv, rng);
      const hhmat::RefinementChainReport r =
          hhmat::check_refinement_chain(hhmat::parse_function(chain_f), a, b, chain_k, chain_p);
      if (chain_json) {
        std::cout << hhmat::to_json(r).dump(2) << "\n";
      } else {
        for (const auto& link : r.chain.links) {
          std::printf("%s <= %s: %s (normalized margin %.6e)\n", link.from.c_str(), link.to.c_str(),
                      link.holds() ? "holds" : "VIOLATED", link.normalized_margin());
        }
        std::printf("L0 <= L4: %s (normalized margin %.6e)\n", r.outer.holds ? "holds" : "VIOLATED",
                    r.outer.normalized_margin());
      }
      return r.holds ? 0 : kExitViolation;
    }

    if (*cex) {
      const hhmat::CounterexampleReport r = hhmat::reproduce_counterexample();
      if (cex_json) {
        std::cout << hhmat::to_json(r).dump(2) << "\n";
      } else {
        auto show = [](const char* label, const hhmat::exact::RationalMatrix& x) {
          const auto s = x.to_strings();
          std::printf("%-8s [[%s, %s], [%s, %s]]\n", label, s[0][0].c_str(), s[0][1].c_str(), s[1][0].c_str(),
                      s[1][1].c_str());
        };
        show("left", r.left);
        show("middle", r.middle);
        show("right", r.right);
        std::printf("reference values: %s\n",
                    r.left_matches && r.middle_matches && r.right_matches ? "reproduced exactly" : "MISMATCH");
        std::printf("middle - left: det %s, %s\n", hhmat::exact::to_string(r.left_gap_det).c_str(),
                    r.left_inequality_fails ? "not PSD" : "PSD");
        std::printf("right - middle: det %s, %s\n", hhmat::exact::to_string(r.right_gap_det).c_str(),
                    r.right_inequality_fails ? "not PSD" : "PSD");
        std::printf("quadrature deviation %.3e\n", r.quadrature_deviation);
      }
      return r.holds() ? 0 : kExitViolation;
    }

    if (*flags) {
      const hhmat::Interval iv = hhmat::Interval::parse(flags_interval);
      try {
        const hhmat::FlagReport r = hhmat::validate_flags(hhmat::parse_function(flags_f), iv, flags_grid);
        std::cout << hhmat::to_json(r).dump(2) << "\n";
        return 0;
      } catch (const hhmat::FlagContradictedError& e) {
        std::cout << hhmat::to_json(e.report()).dump(2) << "\n";
        std::fprintf(stderr, "%s\n", e.what());
        return kExitViolation;
      }
    }

    std::cout << app.help();
    return kExitUsage;
  } catch (const hhmat::Error& e) {
    std::fprintf(stderr, "error: %s\n", e.what());
    return usage_error(e.code()) ? kExitUsage : kExitViolation;
  }
}
