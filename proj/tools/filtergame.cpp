// Copyright 2026 The filtergame Authors
//
// Licensed under the Apache License, Version 2.0 (the "License");
// you may not use this file except in compliance with the License.
// You may obtain a copy of the License at
//
//      http://www.apache.org/licenses/LICENSE-2.0
//
// Unless required by applicable law or agreed to in writing, software
// distributed under the License is distributed on an "AS IS" BASIS,
// WITHOUT WARRANTIES OR CONDITIONS OF ANY KIND, either express or implied.
// See the License for the specific language governing permissions and
// limitations under the License.

// filtergame: command-line front end.
//
//   filtergame eval      single-point report
//   filtergame attacker  single-point report with the endogenous attacker
//   filtergame sweep     CSV over up to two parameter axes
//   filtergame validate  closed forms against the numeric oracles
//
// Exit codes: 0 ok, 1 validation-suite failure, 2 bad input or I/O failure.

#include <cstdint>
#include <fstream>
#include <iostream>
#include <sstream>
#include <string>
#include <vector>

#include "CLI11.hpp"
#include "filtergame/filtergame.hpp"

namespace {

using namespace filtergame;

constexpr int kExitOk = 0;
constexpr int kExitValidationFailed = 1;
constexpr int kExitBadInput = 2;

struct Options {
  std::string config;
  std::string mode = "aligned";
  std::string normalization = "per-clean";
  std::vector<std::string> axes;
  std::vector<std::string> outputs = {"payoffs"};
  std::string out;
  std::uint64_t seed = OracleConfig{}.seed;
  std::int64_t samples = OracleConfig{}.mc_samples;
  int grid = OracleConfig{}.grid_resolution;
  double perturb = 0.0;
};

ModelParams load_params(const Options& o) {
  return o.config.empty() ? baseline_params() : load_config(o.config);
}

// Writes to --out, or stdout when it is empty. Returns false on I/O failure.
bool emit(const Options& o, const std::string& text) {
  if (o.out.empty()) {
    std::cout << text;
    return static_cast<bool>(std::cout.flush());
  }
  std::ofstream f(o.out, std::ios::binary);
  f << text;
  f.close();
  return static_cast<bool>(f);
}

int fail_params(const std::vector<Violation>& v) {
  for (const auto& x : v) std::cerr << "error: " << x.field << ": " << x.message << "\n";
  return kExitBadInput;
}

int cmd_eval(const Options& o, Mode mode) {
  const auto p = load_params(o);
  const auto checked = mode == Mode::kAttacker ? p.with_q(0.5) : p;
  if (auto v = validate(checked); !v.empty()) return fail_params(v);
  const auto text = eval_report(p, mode, parse_normalization(o.normalization));
  if (!emit(o, text)) {
    std::cerr << "error: cannot write output\n";
    return kExitBadInput;
  }
  return kExitOk;
}

int cmd_sweep(const Options& o) {
  SweepSpec spec;
  spec.base = load_params(o);
  spec.mode = parse_mode(o.mode);
  spec.normalization = parse_normalization(o.normalization);
  for (const auto& a : o.axes) spec.axes.push_back(parse_axis(a));
  spec.outputs.clear();
  for (const auto& name : o.outputs) {
    std::stringstream ss(name);
    std::string item;
    while (std::getline(ss, item, ',')) {
      if (!item.empty()) spec.outputs.insert(parse_output(item));
    }
  }
  require_valid(spec);
  std::ostringstream csv;
  write_sweep(spec, csv);
  if (!emit(o, csv.str())) {
    std::cerr << "error: cannot write output\n";
    return kExitBadInput;
  }
  return kExitOk;
}

int cmd_validate(const Options& o) {
  const auto p = load_params(o);
  if (auto v = validate(p); !v.empty()) return fail_params(v);
  ValidationOptions vo;
  vo.oracle.seed = o.seed;
  vo.oracle.mc_samples = o.samples;
  vo.oracle.grid_resolution = o.grid;
  vo.perturb = o.perturb;
  const auto summary = run_validation(p, vo);
  std::string text;
  std::size_t failed = 0;
  for (const auto& c : summary.checks) {
    text += format_check(c) + "\n";
    if (c.status == CheckStatus::kFail) ++failed;
  }
  text += summary.passed() ? "all checks passed\n"
                           : std::to_string(failed) + " check(s) failed\n";
  if (!emit(o, text)) {
    std::cerr << "error: cannot write output\n";
    return kExitBadInput;
  }
  if (!summary.passed()) {
    for (const auto& c : summary.checks) {
      if (c.status == CheckStatus::kFail) std::cerr << "failed: " << c.name << "\n";
    }
    return kExitValidationFailed;
  }
  return kExitOk;
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"Equilibria, payoffs and value of technology in the content-filtering game"};
  app.require_subcommand(1);
  Options o;

  auto common = [&](CLI::App* sub) {
    sub->add_option("--config", o.config, "Key-value parameter file (default: baseline)");
    sub->add_option("--normalization", o.normalization, "per-clean or per-content")
        ->check(CLI::IsMember({"per-clean", "per-content"}));
    sub->add_option("--out", o.out, "Output path (default: stdout)");
  };

  auto* eval = app.add_subcommand("eval", "Report for one parameter point");
  common(eval);
  eval->add_option("--mode", o.mode, "aligned, semi or attacker")
      ->check(CLI::IsMember({"aligned", "semi", "attacker"}));

  auto* attacker = app.add_subcommand("attacker", "Endogenous-attacker report");
  common(attacker);

  auto* sweep = app.add_subcommand("sweep", "CSV over up to two parameter axes");
  common(sweep);
  sweep->add_option("--mode", o.mode, "aligned, semi or attacker")
      ->check(CLI::IsMember({"aligned", "semi", "attacker"}));
  sweep->add_option("--axis", o.axes, "FIELD:START:STOP:STEPS (repeatable, at most two)");
  sweep->add_option("--outputs", o.outputs,
                    "Comma-separated groups: payoffs, thresholds, equilibrium_flags, mvot, "
                    "info_cost, attacker")
      ->delimiter(',');
  sweep->add_option("--seed", o.seed, "Accepted for uniformity; sweeps draw no random numbers");

  auto* validate_cmd = app.add_subcommand("validate", "Run the oracle suite at one point");
  common(validate_cmd);
  validate_cmd->add_option("--seed", o.seed, "Monte-Carlo seed");
  validate_cmd->add_option("--samples", o.samples, "Monte-Carlo samples (>= 1000)");
  validate_cmd->add_option("--grid", o.grid, "Consumer grid points per axis (>= 10)");
  validate_cmd->add_option("--perturb", o.perturb,
                           "Test hook: offset added to every analytic reference value");

  try {
    app.parse(argc, argv);
  } catch (const CLI::ParseError& e) {
    const int code = app.exit(e);
    return code == 0 ? kExitOk : kExitBadInput;
  }

  try {
    if (*eval) return cmd_eval(o, parse_mode(o.mode));
    if (*attacker) return cmd_eval(o, Mode::kAttacker);
    if (*sweep) return cmd_sweep(o);
    if (*validate_cmd) return cmd_validate(o);
  } catch (const ConfigError& e) {
    std::cerr << "error: " << e.what() << "\n";
    return kExitBadInput;
  } catch (const std::invalid_argument& e) {
    std::cerr << "error: " << e.what() << "\n";
    return kExitBadInput;
  } catch (const std::exception& e) {
    std::cerr << "error: " << e.what() << "\n";
    return kExitBadInput;
  }
  return kExitBadInput;
}
