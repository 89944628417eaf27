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

// The rationally inattentive consumer. Conditional on content being
// forwarded, the consumer holds belief qhat = P[X = 0], buys a binary signal
// with channel (pi_tilde0, pi_tilde1) = (P[ignore | X=0], P[ignore | X=1]) at
// price lambda per nat of mutual information, and follows the signal.

#ifndef FILTERGAME_CONSUMER_HPP_
#define FILTERGAME_CONSUMER_HPP_

#include <algorithm>
#include <cmath>
#include <stdexcept>
#include <string>

#include "filtergame/numeric.hpp"
#include "filtergame/params.hpp"

namespace filtergame {

enum class ConsumerMode { kInterior, kAcceptAll, kIgnoreAll };

inline std::string to_string(ConsumerMode m) {
  switch (m) {
    case ConsumerMode::kInterior: return "interior";
    case ConsumerMode::kAcceptAll: return "accept-all";
    case ConsumerMode::kIgnoreAll: return "ignore-all";
  }
  return "?";
}

struct ConsumerPolicy {
  double belief = 0.0;      // the qhat this policy answers
  double p_accept = 0.0;    // unconditional accept probability
  double pi_tilde0 = 0.0;   // P[ignore | X = 0, forwarded]
  double pi_tilde1 = 0.0;   // P[ignore | X = 1, forwarded]
  ConsumerMode mode = ConsumerMode::kInterior;
  double info_cost = 0.0;   // per forwarded item

  bool operator==(const ConsumerPolicy&) const = default;
};

// Mutual information (nats) between content type and the ignore/accept
// decision, for prior qhat and channel (pi_tilde0, pi_tilde1).
inline double mutual_information(double qhat, double pi_tilde0, double pi_tilde1) {
  const double ignore = qhat * pi_tilde0 + (1.0 - qhat) * pi_tilde1;
  const double mi = binary_entropy(ignore) - qhat * binary_entropy(pi_tilde0) -
                    (1.0 - qhat) * binary_entropy(pi_tilde1);
  return std::max(mi, 0.0);
}

// Expected action payoff of one forwarded item.
inline double action_payoff(const ModelParams& p, double qhat, double pi_tilde0,
                            double pi_tilde1) {
  return qhat * (1.0 - pi_tilde0) * (-p.c2) + (1.0 - qhat) * pi_tilde1 * (-p.c1) +
         (1.0 - qhat) * (1.0 - pi_tilde1) * p.b;
}

// The consumer's objective: action payoff minus lambda times mutual
// information.
inline double consumer_objective(const ModelParams& p, double qhat, double pi_tilde0,
                                 double pi_tilde1) {
  return action_payoff(p, qhat, pi_tilde0, pi_tilde1) -
         p.lambda * mutual_information(qhat, pi_tilde0, pi_tilde1);
}

inline double action_payoff(const ModelParams& p, const ConsumerPolicy& c) {
  return action_payoff(p, c.belief, c.pi_tilde0, c.pi_tilde1);
}

inline void require_open_belief(double belief) {
  if (!(belief > 0.0 && belief < 1.0)) {
    throw std::domain_error("belief must lie in (0,1), got " + std::to_string(belief));
  }
}

// Unconstrained accept probability before clamping to [0,1]. Affine in the
// belief: 1 at q_L, 0 at q_H.
inline double unclamped_accept_probability(const ModelParams& p, double belief) {
  const auto e = CostExponentials::from(p);
  return (e.eb * (belief - 1.0) + e.ec1 * (1.0 - belief * e.ec2)) /
         ((e.ec2 - 1.0) * (e.eb - e.ec1));
}

// The consumer's unique best response at belief qhat. Beliefs at or below
// q_L accept everything; beliefs at or above q_H ignore everything; both use
// a costless uninformative channel.
inline ConsumerPolicy best_response(const ModelParams& p, double belief) {
  require_open_belief(belief);
  const auto e = CostExponentials::from(p);
  const auto t = thresholds(p);
  const double raw = unclamped_accept_probability(p, belief);

  ConsumerPolicy c;
  c.belief = belief;
  if (belief <= t.q_L || raw >= 1.0) {
    c.mode = ConsumerMode::kAcceptAll;
    c.p_accept = 1.0;
    return c;
  }
  if (belief >= t.q_H || raw <= 0.0) {
    c.mode = ConsumerMode::kIgnoreAll;
    c.p_accept = 0.0;
    c.pi_tilde0 = 1.0;
    c.pi_tilde1 = 1.0;
    return c;
  }
  const double pc = raw;
  c.mode = ConsumerMode::kInterior;
  c.p_accept = pc;
  c.pi_tilde0 = (1.0 - pc) / ((1.0 - pc) + pc * e.ec2);
  c.pi_tilde1 = (1.0 - pc) * e.ec1 / ((1.0 - pc) * e.ec1 + pc * e.eb);
  c.info_cost = p.lambda * mutual_information(belief, c.pi_tilde0, c.pi_tilde1);
  return c;
}

// Expected action payoff of one forwarded item if the consumer always
// accepts (a = 1) or always ignores (a = 0).
inline double accept_all_payoff(const ModelParams& p, double belief) {
  return (1.0 - belief) * p.b - belief * p.c2;
}
inline double ignore_all_payoff(const ModelParams& p, double belief) {
  return -(1.0 - belief) * p.c1;
}

// Tolerance for agreement of the two divergence forms of value_hat.
inline constexpr double kValueHatFormTolerance = 1e-9;

// Reduced-form value of one forwarded item at belief qhat under the best
// response. On (q_L, q_H) both divergence forms are computed and must agree.
inline double value_hat(const ModelParams& p, double belief) {
  require_open_belief(belief);
  const auto t = thresholds(p);
  if (belief <= t.q_L) return accept_all_payoff(p, belief);
  if (belief >= t.q_H) return ignore_all_payoff(p, belief);
  const double via_low = accept_all_payoff(p, belief) + p.lambda * kl_bernoulli(belief, t.q_L, t.q_L_complement);
  const double via_high =
      ignore_all_payoff(p, belief) + p.lambda * kl_bernoulli(belief, t.q_H, t.q_H_complement);
  if (std::abs(via_low - via_high) > kValueHatFormTolerance) {
    throw std::logic_error("value_hat: divergence forms disagree (" +
                           std::to_string(via_low) + " vs " + std::to_string(via_high) + ")");
  }
  return via_low;
}

struct Affine {
  double slope = 0.0;
  double intercept = 0.0;
  double operator()(double x) const { return slope * x + intercept; }
};

// The joint masses of the interior best response, each affine in the belief:
//   accept_malicious = (1 - pi_tilde0) qhat
//   ignore_clean     = pi_tilde1 (1 - qhat)
//   accept_clean     = (1 - pi_tilde1)(1 - qhat)
// Signs are fixed so that every mass is nonnegative on (q_L, q_H).
struct LinearIdentities {
  Affine accept_malicious;
  Affine ignore_clean;
  Affine accept_clean;
};

inline LinearIdentities linear_identity_coefficients(const ModelParams& p) {
  const auto e = CostExponentials::from(p);
  const auto t = thresholds(p);
  const double k_mal = e.ec2 / (1.0 - e.ec2);
  const double k_ign = e.ec1 / (e.eb - e.ec1);
  const double k_acc = e.eb / (e.eb - e.ec1);
  return LinearIdentities{{-k_mal, k_mal * t.q_H},
                          {k_ign, -k_ign * t.q_L},
                          {-k_acc, k_acc * t.q_H}};
}

struct JointMasses {
  double accept_malicious = 0.0;
  double ignore_clean = 0.0;
  double accept_clean = 0.0;
};

inline JointMasses linear_identities(const ModelParams& p, double belief) {
  const auto t = thresholds(p);
  if (!(belief > t.q_L && belief < t.q_H)) {
    throw std::domain_error("linear_identities: belief outside the interior regime (q_L, q_H)");
  }
  const auto c = linear_identity_coefficients(p);
  return {c.accept_malicious(belief), c.ignore_clean(belief), c.accept_clean(belief)};
}

}  // namespace filtergame

#endif  // FILTERGAME_CONSUMER_HPP_
