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

// The oracle suite behind `filtergame validate`: every closed form at one
// parameter point is checked against its independent numeric counterpart.

#ifndef FILTERGAME_VALIDATION_HPP_
#define FILTERGAME_VALIDATION_HPP_

#include <algorithm>
#include <cmath>
#include <exception>
#include <string>
#include <utility>
#include <vector>

#include "filtergame/attacker.hpp"
#include "filtergame/beliefs.hpp"
#include "filtergame/consumer.hpp"
#include "filtergame/equilibrium.hpp"
#include "filtergame/format.hpp"
#include "filtergame/oracle.hpp"
#include "filtergame/payoffs.hpp"
#include "filtergame/vot.hpp"

namespace filtergame {

inline constexpr double kChannelTolerance = 1e-4;
inline constexpr double kObjectiveTolerance = 1e-6;
inline constexpr double kMonteCarloSigmas = 4.0;
inline constexpr double kMvotTolerance = 1e-4;
inline constexpr double kFiniteDifferenceStep = 1e-5;
inline constexpr double kAttackerRateTolerance = 1e-4;
inline constexpr double kInducedBeliefTolerance = 1e-9;

enum class CheckStatus { kPass, kFail, kSkip };

inline std::string to_string(CheckStatus s) {
  switch (s) {
    case CheckStatus::kPass: return "PASS";
    case CheckStatus::kFail: return "FAIL";
    case CheckStatus::kSkip: return "SKIP";
  }
  return "?";
}

struct ValidationCheck {
  std::string name;
  CheckStatus status = CheckStatus::kPass;
  double error = 0.0;
  double tolerance = 0.0;
  std::string detail;
};

struct ValidationOptions {
  OracleConfig oracle;
  // Test hook: added to every analytic reference value before comparison.
  double perturb = 0.0;
};

struct ValidationSummary {
  std::vector<ValidationCheck> checks;

  bool passed() const {
    return std::none_of(checks.begin(), checks.end(),
                        [](const auto& c) { return c.status == CheckStatus::kFail; });
  }
};

inline std::string format_check(const ValidationCheck& c) {
  std::string line = to_string(c.status) + " " + c.name;
  if (c.status != CheckStatus::kSkip) {
    line += " error=" + format_double(c.error) + " tolerance=" + format_double(c.tolerance);
  }
  if (!c.detail.empty()) line += " (" + c.detail + ")";
  return line;
}

namespace detail {

class CheckList {
 public:
  explicit CheckList(double perturb) : perturb_(perturb) {}

  // Records |analytic + perturb - numeric| against `tolerance`.
  void compare(const std::string& name, double analytic, double numeric, double tolerance) {
    const double err = std::abs(analytic + perturb_ - numeric);
    out_.checks.push_back({name, err <= tolerance ? CheckStatus::kPass : CheckStatus::kFail, err,
                           tolerance, ""});
  }

  // Records a one-sided check: numeric - (analytic + perturb) <= tolerance.
  void at_least(const std::string& name, double analytic, double numeric, double tolerance) {
    const double shortfall = numeric - (analytic + perturb_);
    out_.checks.push_back({name, shortfall <= tolerance ? CheckStatus::kPass : CheckStatus::kFail,
                           std::max(shortfall, 0.0), tolerance, ""});
  }

  void skip(const std::string& name, const std::string& why) {
    out_.checks.push_back({name, CheckStatus::kSkip, 0.0, 0.0, why});
  }

  void fail(const std::string& name, const std::string& why) {
    out_.checks.push_back({name, CheckStatus::kFail, 0.0, 0.0, why});
  }

  ValidationSummary take() { return std::move(out_); }

 private:
  double perturb_;
  ValidationSummary out_;
};

inline void check_consumer(const ModelParams& p, const ValidationOptions& o, CheckList& out) {
  const auto t = thresholds(p);
  const double beliefs[] = {p.q, differentiate_posterior(p).value, 0.5 * (t.q_L + t.q_H)};
  const char* labels[] = {"prior", "differentiate", "midpoint"};
  for (int i = 0; i < 3; ++i) {
    const std::string name = std::string("consumer_br.") + labels[i];
    const auto closed = best_response(p, beliefs[i]);
    const auto numeric = numeric_consumer_br(p, beliefs[i], o.oracle);
    out.compare(name + ".pi_tilde0", closed.pi_tilde0, numeric.policy.pi_tilde0,
                kChannelTolerance);
    out.compare(name + ".pi_tilde1", closed.pi_tilde1, numeric.policy.pi_tilde1,
                kChannelTolerance);
    out.at_least(name + ".objective", action_payoff(p, closed) - closed.info_cost,
                 numeric.objective, kObjectiveTolerance);
  }
}

inline void check_monte_carlo(const ModelParams& p, const ValidationOptions& o,
                              CheckList& out) {
  const FilterStrategy profiles[] = {FilterStrategy::forward(), FilterStrategy::differentiate(),
                                     FilterStrategy::block()};
  for (const auto& s : profiles) {
    const std::string name = "monte_carlo." + s.name();
    const auto aligned = evaluate(p, s, Utilities::kAligned);
    const auto semi = evaluate(p, s, Utilities::kSemiAligned);
    const auto c = sustaining_policy(p, s);
    // One run yields both accountings: the semi-aligned filter sees action
    // payoffs only, the consumer is charged its information cost.
    const auto mc = monte_carlo_payoff(p, s, c, Utilities::kSemiAligned, o.oracle);
    auto tol = [](const Estimate& e) { return kMonteCarloSigmas * e.std_error + 1e-12; };
    out.compare(name + ".aligned", aligned.v_consumer, mc.consumer.mean, tol(mc.consumer));
    out.compare(name + ".semi_filter", semi.v_filter, mc.filter.mean, tol(mc.filter));
    out.compare(name + ".attacker", aligned.v_attacker, mc.attacker.mean, tol(mc.attacker));
  }
}

inline void check_mvot(const ModelParams& p, CheckList& out) {
  auto guarded = [&](const std::string& name, auto&& body) {
    try {
      body();
    } catch (const std::domain_error& e) {
      out.skip(name, e.what());
    } catch (const std::invalid_argument& e) {
      out.skip(name, e.what());
    }
  };
  guarded("mvot.aligned", [&] {
    const auto m = mvot_aligned(p);
    const auto profile = m.regime == MvotRegime::kZero ? FilterStrategy::forward()
                                                       : FilterStrategy::differentiate();
    const auto fd = finite_difference(p, profile, Utilities::kAligned, kFiniteDifferenceStep);
    out.compare("mvot.aligned.d_pi0", m.d_pi0, fd.d_pi0, kMvotTolerance);
    out.compare("mvot.aligned.d_pi1", m.d_pi1, fd.d_pi1, kMvotTolerance);
  });
  guarded("mvot.semi", [&] {
    const auto dif = FilterStrategy::differentiate();
    const auto m = mvot_semialigned(p, dif);
    const auto ff = finite_difference(p, dif, Utilities::kSemiAligned, kFiniteDifferenceStep,
                                      Player::kFilter);
    const auto fc = finite_difference(p, dif, Utilities::kSemiAligned, kFiniteDifferenceStep,
                                      Player::kConsumer);
    out.compare("mvot.semi.filter.d_pi0", m.filter.d_pi0, ff.d_pi0, kMvotTolerance);
    out.compare("mvot.semi.filter.d_pi1", m.filter.d_pi1, ff.d_pi1, kMvotTolerance);
    out.compare("mvot.semi.consumer.d_pi0", m.consumer.d_pi0, fc.d_pi0, kMvotTolerance);
    out.compare("mvot.semi.consumer.d_pi1", m.consumer.d_pi1, fc.d_pi1, kMvotTolerance);
  });
}

inline void check_attacker(const ModelParams& p, CheckList& out) {
  for (const auto& s : {FilterStrategy::forward(), FilterStrategy::differentiate()}) {
    out.compare("attacker.best_rho." + s.name(), attacker_best_rho(p, s),
                numeric_attacker_br(p, s), kAttackerRateTolerance);
  }
  const auto eq = endogenous_equilibrium(p);
  if (!eq.found) {
    out.skip("attacker.equilibrium", eq.diagnostic);
    return;
  }
  out.compare("attacker.equilibrium.q_induced", thresholds(p).q_L, eq.q_induced,
              kInducedBeliefTolerance);
  out.compare("attacker.equilibrium.info_cost", 0.0, eq.consumer_info_cost, 0.0);
}

}  // namespace detail

inline ValidationSummary run_validation(const ModelParams& p, const ValidationOptions& o = {}) {
  require_valid(p);
  require_valid(o.oracle);
  detail::CheckList out(o.perturb);
  detail::check_consumer(p, o, out);
  detail::check_monte_carlo(p, o, out);
  detail::check_mvot(p, out);
  detail::check_attacker(p, out);
  return out.take();
}

}  // namespace filtergame

#endif  // FILTERGAME_VALIDATION_HPP_
