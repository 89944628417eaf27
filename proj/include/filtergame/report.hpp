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

// Flat per-point records shared by the eval report and the sweep CSV, so a
// sweep cell and a single-point report print identical values.

#ifndef FILTERGAME_REPORT_HPP_
#define FILTERGAME_REPORT_HPP_

#include <optional>
#include <set>
#include <stdexcept>
#include <string>
#include <string_view>
#include <utility>
#include <vector>

#include "filtergame/attacker.hpp"
#include "filtergame/beliefs.hpp"
#include "filtergame/config.hpp"
#include "filtergame/equilibrium.hpp"
#include "filtergame/format.hpp"
#include "filtergame/payoffs.hpp"
#include "filtergame/vot.hpp"

namespace filtergame {

enum class Mode { kAligned, kSemiAligned, kAttacker };

inline std::string to_string(Mode m) {
  switch (m) {
    case Mode::kAligned: return "aligned";
    case Mode::kSemiAligned: return "semi";
    case Mode::kAttacker: return "attacker";
  }
  return "?";
}

inline Mode parse_mode(std::string_view s) {
  if (s == "aligned") return Mode::kAligned;
  if (s == "semi") return Mode::kSemiAligned;
  if (s == "attacker") return Mode::kAttacker;
  throw std::invalid_argument("unknown mode '" + std::string(s) + "'");
}

inline Normalization parse_normalization(std::string_view s) {
  if (s == "per-clean") return Normalization::kPerClean;
  if (s == "per-content") return Normalization::kPerContent;
  throw std::invalid_argument("unknown normalization '" + std::string(s) + "'");
}

// Column groups, emitted in this declaration order.
enum class Output { kPayoffs, kThresholds, kEquilibriumFlags, kMvot, kInfoCost, kAttacker };

inline constexpr Output kAllOutputs[] = {Output::kPayoffs,          Output::kThresholds,
                                         Output::kEquilibriumFlags, Output::kMvot,
                                         Output::kInfoCost,         Output::kAttacker};

inline std::string to_string(Output o) {
  switch (o) {
    case Output::kPayoffs: return "payoffs";
    case Output::kThresholds: return "thresholds";
    case Output::kEquilibriumFlags: return "equilibrium_flags";
    case Output::kMvot: return "mvot";
    case Output::kInfoCost: return "info_cost";
    case Output::kAttacker: return "attacker";
  }
  return "?";
}

inline Output parse_output(std::string_view s) {
  for (auto o : kAllOutputs) {
    if (to_string(o) == s) return o;
  }
  throw std::invalid_argument("unknown output group '" + std::string(s) + "'");
}

using OutputSet = std::set<Output>;

inline OutputSet all_outputs() { return OutputSet(std::begin(kAllOutputs), std::end(kAllOutputs)); }

using Record = std::vector<std::pair<std::string, std::string>>;

inline std::string format_bool(bool b) { return b ? "true" : "false"; }

inline std::string format_optional(const std::optional<double>& v) {
  return v ? format_double(*v) : std::string();
}

inline std::string format_strategy(const std::optional<FilterStrategy>& s) {
  return s ? to_string(s->kind()) : std::string("none");
}

// Column names for a mode and output set, in emission order.
inline std::vector<std::string> record_columns(Mode mode, const OutputSet& outputs) {
  std::vector<std::string> cols;
  auto add = [&](std::initializer_list<const char*> names) {
    for (const char* n : names) cols.emplace_back(n);
  };
  const bool attacker = mode == Mode::kAttacker;
  for (auto o : kAllOutputs) {
    if (!outputs.count(o)) continue;
    switch (o) {
      case Output::kPayoffs:
        if (attacker) {
          add({"v_players", "v_attacker_eq"});
        } else {
          add({"v_fwd_filter", "v_fwd_consumer", "v_dif_filter", "v_dif_consumer",
               "v_blk_filter", "v_blk_consumer"});
        }
        break;
      case Output::kThresholds:
        add({"q_L", "q_H", "Lambda", "Q_quality"});
        if (!attacker) add({"q_dif", "beta"});
        break;
      case Output::kEquilibriumFlags:
        if (mode == Mode::kAligned) {
          add({"selected", "fwd_eq", "dif_eq", "blk_eq", "condition_case", "condition_holds"});
        } else if (mode == Mode::kSemiAligned) {
          add({"selected", "fwd_eq", "dif_eq", "blk_eq", "mixed_gamma", "dif_condition",
               "fwd_condition", "inefficient", "variant_disagreement"});
        } else {
          add({"profile", "found", "forward_sustained", "differentiate_sustained",
               "knife_edge"});
        }
        break;
      case Output::kMvot:
        if (mode == Mode::kAligned) {
          add({"mvot_regime", "mvot_d_pi0", "mvot_d_pi1"});
        } else if (mode == Mode::kSemiAligned) {
          add({"mvot_filter_regime", "mvot_filter_d_pi0", "mvot_filter_d_pi1",
               "mvot_consumer_regime", "mvot_consumer_d_pi0", "mvot_consumer_d_pi1"});
        }
        break;
      case Output::kInfoCost:
        if (attacker) {
          add({"consumer_info_cost"});
        } else {
          add({"info_cost_fwd", "info_cost_dif"});
        }
        break;
      case Output::kAttacker:
        if (attacker) {
          add({"rho0_star", "q_prior", "q_induced", "fwd_dif_gap", "q_forward_at_dif_rate",
               "q_forward_at_dif_rate_above_high"});
        } else {
          add({"v_attacker_fwd", "v_attacker_dif"});
        }
        break;
    }
  }
  return cols;
}

// Values for one valid parameter point, keyed and ordered as
// record_columns(mode, outputs). Throws on numeric failures.
inline Record point_record(const ModelParams& p, Mode mode, Normalization n,
                           const OutputSet& outputs) {
  Record r;
  auto put = [&](const char* key, std::string value) { r.emplace_back(key, std::move(value)); };
  auto num = [&](const char* key, double v) { put(key, format_double(v)); };
  const auto t = thresholds(p);

  if (mode == Mode::kAttacker) {
    const auto eq = endogenous_equilibrium(p);
    for (auto o : kAllOutputs) {
      if (!outputs.count(o)) continue;
      switch (o) {
        case Output::kPayoffs:
          num("v_players", eq.v_players);
          num("v_attacker_eq", eq.v_attacker);
          break;
        case Output::kThresholds:
          num("q_L", t.q_L);
          num("q_H", t.q_H);
          num("Lambda", t.Lambda);
          num("Q_quality", t.Q_quality);
          break;
        case Output::kEquilibriumFlags:
          put("profile", to_string(eq.filter_profile.kind()));
          put("found", format_bool(eq.found));
          put("forward_sustained", format_bool(eq.forward_sustained));
          put("differentiate_sustained", format_bool(eq.differentiate_sustained));
          put("knife_edge", format_bool(eq.knife_edge));
          break;
        case Output::kMvot:
          break;
        case Output::kInfoCost:
          num("consumer_info_cost", eq.consumer_info_cost);
          break;
        case Output::kAttacker:
          num("rho0_star", eq.rho0_star);
          num("q_prior", eq.q_prior);
          num("q_induced", eq.q_induced);
          num("fwd_dif_gap", eq.fwd_dif_gap);
          num("q_forward_at_dif_rate", eq.q_forward_at_dif_rate);
          put("q_forward_at_dif_rate_above_high", format_bool(eq.q_forward_at_dif_rate_above_high));
          break;
      }
    }
    return r;
  }

  const Utilities u = mode == Mode::kAligned ? Utilities::kAligned : Utilities::kSemiAligned;
  const auto fwd = evaluate(p, FilterStrategy::forward(), u, n);
  const auto dif = evaluate(p, FilterStrategy::differentiate(), u, n);
  const auto blk = evaluate(p, FilterStrategy::block(), u, n);
  const auto dif_belief = differentiate_posterior(p);
  for (auto o : kAllOutputs) {
    if (!outputs.count(o)) continue;
    switch (o) {
      case Output::kPayoffs:
        num("v_fwd_filter", fwd.v_filter);
        num("v_fwd_consumer", fwd.v_consumer);
        num("v_dif_filter", dif.v_filter);
        num("v_dif_consumer", dif.v_consumer);
        num("v_blk_filter", blk.v_filter);
        num("v_blk_consumer", blk.v_consumer);
        break;
      case Output::kThresholds:
        num("q_L", t.q_L);
        num("q_H", t.q_H);
        num("Lambda", t.Lambda);
        num("Q_quality", t.Q_quality);
        num("q_dif", dif_belief.value);
        num("beta", dif_belief.forward_prob);
        break;
      case Output::kEquilibriumFlags: {
        const auto rep = mode == Mode::kAligned ? aligned_optimum(p) : semi_equilibrium_status(p);
        auto eq_flag = [&](StrategyKind k) {
          const auto* s = rep.find(k);
          return format_bool(s != nullptr && s->check.is_equilibrium);
        };
        put("selected", format_strategy(rep.selected));
        put("fwd_eq", eq_flag(StrategyKind::kForward));
        put("dif_eq", eq_flag(StrategyKind::kDifferentiate));
        put("blk_eq", eq_flag(StrategyKind::kBlock));
        if (mode == Mode::kAligned) {
          put("condition_case", std::string(1, rep.certificate->label));
          put("condition_holds", format_bool(rep.certificate->holds));
        } else {
          put("mixed_gamma", format_optional(rep.mixed_gamma));
          put("dif_condition", format_bool(rep.dif_condition));
          put("fwd_condition", format_bool(rep.fwd_condition));
          put("inefficient", format_bool(rep.inefficiency));
          put("variant_disagreement", format_bool(rep.variant_disagreement));
        }
        break;
      }
      case Output::kMvot:
        if (mode == Mode::kAligned) {
          const auto m = mvot_aligned(p);
          put("mvot_regime", to_string(m.regime));
          num("mvot_d_pi0", m.d_pi0 * (n == Normalization::kPerClean ? 1.0 : 1.0 - p.q));
          num("mvot_d_pi1", m.d_pi1 * (n == Normalization::kPerClean ? 1.0 : 1.0 - p.q));
        } else {
          const auto m = mvot_semialigned(p, FilterStrategy::differentiate(), n);
          put("mvot_filter_regime", to_string(m.filter.regime));
          num("mvot_filter_d_pi0", m.filter.d_pi0);
          num("mvot_filter_d_pi1", m.filter.d_pi1);
          put("mvot_consumer_regime", to_string(m.consumer.regime));
          num("mvot_consumer_d_pi0", m.consumer.d_pi0);
          num("mvot_consumer_d_pi1", m.consumer.d_pi1);
        }
        break;
      case Output::kInfoCost:
        num("info_cost_fwd", fwd.info_cost);
        num("info_cost_dif", dif.info_cost);
        break;
      case Output::kAttacker:
        num("v_attacker_fwd", fwd.v_attacker);
        num("v_attacker_dif", dif.v_attacker);
        break;
    }
  }
  return r;
}

// Human-readable single-point report: one `key: value` line per entry.
inline std::string eval_report(const ModelParams& p, Mode mode, Normalization n) {
  std::string out;
  auto line = [&](const std::string& k, const std::string& v) { out += k + ": " + v + "\n"; };
  line("mode", to_string(mode));
  line("normalization", to_string(n));
  for (auto key : kParamKeys) line(std::string(key), format_double(param_value(p, key)));
  for (const auto& [k, v] : point_record(p, mode, n, all_outputs())) line(k, v);
  if (mode == Mode::kAttacker) {
    const auto eq = endogenous_equilibrium(p);
    if (!eq.diagnostic.empty()) line("diagnostic", eq.diagnostic);
  } else {
    const auto dif = evaluate(p, FilterStrategy::differentiate(), Utilities::kAligned, n);
    const auto fwd = evaluate(p, FilterStrategy::forward(), Utilities::kAligned, n);
    if (fwd.consumer) line("consumer_mode_fwd", to_string(fwd.consumer->mode));
    if (dif.consumer) line("consumer_mode_dif", to_string(dif.consumer->mode));
  }
  return out;
}

}  // namespace filtergame

#endif  // FILTERGAME_REPORT_HPP_
