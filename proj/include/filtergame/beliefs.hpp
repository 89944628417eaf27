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

#ifndef FILTERGAME_BELIEFS_HPP_
#define FILTERGAME_BELIEFS_HPP_

#include <stdexcept>
#include <string>

#include "filtergame/params.hpp"

namespace filtergame {

enum class StrategyKind { kForward, kBlock, kDifferentiate, kUnreasonable, kMixed };

// A filter action strategy: block with probability gamma0 on a malicious
// signal and gamma1 on a clean signal. The four pure strategies are the
// corners of the unit square and are canonicalized to their named kind.
class FilterStrategy {
 public:
  static FilterStrategy forward() { return FilterStrategy(0.0, 0.0); }
  static FilterStrategy block() { return FilterStrategy(1.0, 1.0); }
  static FilterStrategy differentiate() { return FilterStrategy(1.0, 0.0); }
  static FilterStrategy unreasonable() { return FilterStrategy(0.0, 1.0); }
  static FilterStrategy mixed(double gamma0, double gamma1) {
    return FilterStrategy(gamma0, gamma1);
  }

  double gamma0() const { return gamma0_; }
  double gamma1() const { return gamma1_; }

  StrategyKind kind() const {
    if (gamma0_ == 0.0 && gamma1_ == 0.0) return StrategyKind::kForward;
    if (gamma0_ == 1.0 && gamma1_ == 1.0) return StrategyKind::kBlock;
    if (gamma0_ == 1.0 && gamma1_ == 0.0) return StrategyKind::kDifferentiate;
    if (gamma0_ == 0.0 && gamma1_ == 1.0) return StrategyKind::kUnreasonable;
    return StrategyKind::kMixed;
  }

  // Blocks more often on a clean signal than on a malicious one. Weakly
  // dominated; evaluated but never selected as an equilibrium.
  bool is_unreasonable_direction() const { return gamma0_ < gamma1_; }

  std::string name() const;

  bool operator==(const FilterStrategy&) const = default;

 private:
  FilterStrategy(double gamma0, double gamma1) : gamma0_(gamma0), gamma1_(gamma1) {
    if (!(gamma0 >= 0.0 && gamma0 <= 1.0) || !(gamma1 >= 0.0 && gamma1 <= 1.0)) {
      throw std::invalid_argument("blocking probabilities must lie in [0,1]");
    }
  }

  double gamma0_;
  double gamma1_;
};

inline std::string to_string(StrategyKind k) {
  switch (k) {
    case StrategyKind::kForward: return "forward";
    case StrategyKind::kBlock: return "block";
    case StrategyKind::kDifferentiate: return "differentiate";
    case StrategyKind::kUnreasonable: return "unreasonable";
    case StrategyKind::kMixed: return "mixed";
  }
  return "?";
}

inline std::string FilterStrategy::name() const {
  if (kind() != StrategyKind::kMixed) return to_string(kind());
  return "mixed(" + std::to_string(gamma0_) + "," + std::to_string(gamma1_) + ")";
}

// Effective per-state block probabilities. A mixed strategy behaves like the
// differentiating strategy of a filter with these signal qualities.
struct SignalQuality {
  double pi0 = 0.0;  // P[blocked | X = 0]
  double pi1 = 0.0;  // P[blocked | X = 1]
};

inline SignalQuality equivalent_signal_quality(const ModelParams& p,
                                               const FilterStrategy& s) {
  const double spread = s.gamma0() - s.gamma1();
  return {p.pi0 * spread + s.gamma1(), p.pi1 * spread + s.gamma1()};
}

struct Belief {
  double value = 0.0;         // P[X = 0 | forwarded]
  double forward_prob = 0.0;  // P[forwarded]
};

// Forwarding probability below which the posterior is treated as undefined.
inline constexpr double kMinForwardProb = 1e-15;

inline Belief posterior(const ModelParams& p, const FilterStrategy& s) {
  if (s.kind() == StrategyKind::kBlock) {
    throw std::domain_error("posterior undefined under block-all");
  }
  auto checked = [](double forward) {
    if (!(forward >= kMinForwardProb)) {
      throw std::domain_error("posterior undefined: forwarding probability underflows");
    }
    return forward;
  };
  if (s.gamma0() == s.gamma1()) {
    // Signal-independent blocking: the posterior is exactly the prior.
    return {p.q, checked(1.0 - s.gamma0())};
  }
  const double mal = (p.pi0 * (1.0 - s.gamma0()) + (1.0 - p.pi0) * (1.0 - s.gamma1())) * p.q;
  const double clean =
      (p.pi1 * (1.0 - s.gamma0()) + (1.0 - p.pi1) * (1.0 - s.gamma1())) * (1.0 - p.q);
  const double forward = checked(mal + clean);
  return {mal / forward, forward};
}

// Posterior under the differentiating strategy, the q_dif of the analysis.
inline Belief differentiate_posterior(const ModelParams& p) {
  return posterior(p, FilterStrategy::differentiate());
}

}  // namespace filtergame

#endif  // FILTERGAME_BELIEFS_HPP_
