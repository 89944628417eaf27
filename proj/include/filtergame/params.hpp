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

#ifndef FILTERGAME_PARAMS_HPP_
#define FILTERGAME_PARAMS_HPP_

#include <cmath>
#include <stdexcept>
#include <string>
#include <vector>

namespace filtergame {

// Model primitives. Content type X = 0 is malicious, X = 1 is clean.
// All entropies and divergences in this library are in nats.
struct ModelParams {
  double q = 0.5;       // prior P[X = 0]
  double pi0 = 0.8;     // P[filter signal = 0 | X = 0]
  double pi1 = 0.3;     // P[filter signal = 0 | X = 1]
  double b = 1.0;       // benefit of accepting clean content
  double c1 = 1.0;      // cost of losing clean content (blocked or ignored)
  double c2 = 4.0;      // cost of accepting malicious content
  double lambda = 2.0;  // price of one nat of mutual information

  // Attacker rate: expected malicious items per clean item.
  double rho0() const { return q / (1.0 - q); }

  static double q_from_rho0(double rho0) { return rho0 / (1.0 + rho0); }

  ModelParams with_q(double new_q) const {
    ModelParams p = *this;
    p.q = new_q;
    return p;
  }
  ModelParams with_signal(double new_pi0, double new_pi1) const {
    ModelParams p = *this;
    p.pi0 = new_pi0;
    p.pi1 = new_pi1;
    return p;
  }

  bool operator==(const ModelParams&) const = default;
};

// The baseline parameter set used throughout the tests and README.
inline ModelParams baseline_params() { return ModelParams{}; }

struct Violation {
  std::string field;
  std::string message;
};

// Returns every violated invariant. An empty vector means the params are
// valid. Boundary probabilities are rejected, never clamped.
inline std::vector<Violation> validate(const ModelParams& p) {
  std::vector<Violation> out;
  auto open_unit = [&](const char* name, double v) {
    if (!std::isfinite(v) || !(v > 0.0 && v < 1.0)) {
      out.push_back({name, std::string(name) + " not in open interval (0,1)"});
      return false;
    }
    return true;
  };
  auto positive = [&](const char* name, double v) {
    if (!std::isfinite(v) || !(v > 0.0)) {
      out.push_back({name, std::string(name) + " must be finite and > 0"});
    }
  };
  open_unit("q", p.q);
  const bool ok0 = open_unit("pi0", p.pi0);
  const bool ok1 = open_unit("pi1", p.pi1);
  if (ok0 && ok1 && p.pi0 < p.pi1) {
    out.push_back({"pi0", "pi0 < pi1 (filter signal must be informative or "
                          "neutral)"});
  }
  positive("b", p.b);
  positive("c1", p.c1);
  positive("c2", p.c2);
  positive("lambda", p.lambda);
  return out;
}

inline std::string describe(const std::vector<Violation>& violations) {
  std::string s;
  for (const auto& v : violations) {
    if (!s.empty()) s += "; ";
    s += v.field + ": " + v.message;
  }
  return s;
}

// Throws std::invalid_argument listing every violation.
inline void require_valid(const ModelParams& p) {
  auto v = validate(p);
  if (!v.empty()) throw std::invalid_argument("invalid parameters: " + describe(v));
}

// Per-content payoff entries. Losing malicious content is worth zero.
struct UtilityMatrix {
  double accept_malicious = 0.0;
  double accept_clean = 0.0;
  double lost_clean = 0.0;
  double lost_malicious = 0.0;

  static UtilityMatrix from(const ModelParams& p) {
    return UtilityMatrix{-p.c2, p.b, -p.c1, 0.0};
  }
  bool operator==(const UtilityMatrix&) const = default;
};

struct Thresholds {
  double q_L = 0.0;       // at or below: consumer accepts everything
  double q_H = 0.0;       // above: consumer ignores everything
  double Lambda = 0.0;    // cost-side threshold ((b+c1)/c2)((1-q_L)/q_L)
  double Q_quality = 0.0; // (pi0/pi1)((1-pi1)/(1-pi0))
  // 1 - q_L and 1 - q_H without cancellation; q_H can sit within 1e-10 of 1.
  double q_L_complement = 0.0;
  double q_H_complement = 0.0;
};

// Exponentials e^{b/lambda}, e^{-c1/lambda}, e^{-c2/lambda} shared by the
// closed forms. Overflow is reported rather than propagated as inf/nan.
struct CostExponentials {
  double eb = 0.0;   // e^{b/lambda}
  double ec1 = 0.0;  // e^{-c1/lambda}
  double ec2 = 0.0;  // e^{-c2/lambda}

  static CostExponentials from(const ModelParams& p) {
    CostExponentials e{std::exp(p.b / p.lambda), std::exp(-p.c1 / p.lambda),
                       std::exp(-p.c2 / p.lambda)};
    if (!std::isfinite(e.eb)) {
      throw std::overflow_error("exp(b/lambda) overflows: b/lambda = " +
                                std::to_string(p.b / p.lambda));
    }
    if (e.ec1 == 0.0) {
      throw std::overflow_error("exp(-c1/lambda) underflows: c1/lambda = " +
                                std::to_string(p.c1 / p.lambda));
    }
    if (e.ec2 == 0.0) {
      throw std::overflow_error("exp(-c2/lambda) underflows: c2/lambda = " +
                                std::to_string(p.c2 / p.lambda));
    }
    return e;
  }
};

inline Thresholds thresholds(const ModelParams& p) {
  const auto e = CostExponentials::from(p);
  Thresholds t;
  t.q_H = (e.eb - e.ec1) / (e.eb - e.ec1 * e.ec2);
  t.q_L = t.q_H * e.ec2;
  const double one_minus_ec2 = -std::expm1(-p.c2 / p.lambda);
  t.q_H_complement = e.ec1 * one_minus_ec2 / (e.eb - e.ec1 * e.ec2);
  t.q_L_complement = t.q_H_complement + t.q_H * one_minus_ec2;
  t.Lambda = ((p.b + p.c1) / p.c2) * (t.q_L_complement / t.q_L);
  t.Q_quality = (p.pi0 / p.pi1) * ((1.0 - p.pi1) / (1.0 - p.pi0));
  return t;
}

}  // namespace filtergame

#endif  // FILTERGAME_PARAMS_HPP_
