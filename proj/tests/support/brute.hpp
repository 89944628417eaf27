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

// Independent reference computations for the tests. Nothing here calls the
// library's closed forms: thresholds use long double, expectations come from
// enumerating the joint distribution of (type, filter signal, filter action,
// consumer action), and mutual information comes from the joint table.

#ifndef FILTERGAME_TESTS_SUPPORT_BRUTE_HPP_
#define FILTERGAME_TESTS_SUPPORT_BRUTE_HPP_

#include <cmath>
#include <random>

#include "filtergame/params.hpp"

namespace brute {

using filtergame::ModelParams;

struct Thresholds {
  double q_L, q_H, Lambda, Q;
};

inline Thresholds thresholds(const ModelParams& p) {
  const long double l = p.lambda;
  const long double eb = std::exp(static_cast<long double>(p.b) / l);
  const long double e1 = std::exp(-static_cast<long double>(p.c1) / l);
  const long double e12 = std::exp(-static_cast<long double>(p.c1 + p.c2) / l);
  const long double qh = (eb - e1) / (eb - e12);
  const long double ql = qh * std::exp(-static_cast<long double>(p.c2) / l);
  const long double lam = (p.b + p.c1) / static_cast<long double>(p.c2) * (1 - ql) / ql;
  const long double Q = static_cast<long double>(p.pi0) / p.pi1 * (1 - p.pi1) / (1 - p.pi0);
  return {static_cast<double>(ql), static_cast<double>(qh), static_cast<double>(lam),
          static_cast<double>(Q)};
}

// P[X = 0 | forwarded] and P[forwarded] by enumeration.
struct Posterior {
  double value, forward;
};

inline Posterior posterior(const ModelParams& p, double g0, double g1) {
  double fwd_mal = 0.0, fwd_clean = 0.0;
  for (int x = 0; x < 2; ++x) {
    const double px = x == 0 ? p.q : 1.0 - p.q;
    const double s0 = x == 0 ? p.pi0 : p.pi1;
    for (int sig = 0; sig < 2; ++sig) {
      const double ps = sig == 0 ? s0 : 1.0 - s0;
      const double pass = 1.0 - (sig == 0 ? g0 : g1);
      (x == 0 ? fwd_mal : fwd_clean) += px * ps * pass;
    }
  }
  return {fwd_mal / (fwd_mal + fwd_clean), fwd_mal + fwd_clean};
}

// Mutual information in nats between type and the ignore decision, from
// the 2x2 joint table.
inline double mutual_information(double qhat, double t0, double t1) {
  const double joint[2][2] = {{qhat * t0, qhat * (1 - t0)},
                              {(1 - qhat) * t1, (1 - qhat) * (1 - t1)}};
  const double px[2] = {qhat, 1 - qhat};
  const double pa[2] = {joint[0][0] + joint[1][0], joint[0][1] + joint[1][1]};
  double mi = 0.0;
  for (int x = 0; x < 2; ++x) {
    for (int a = 0; a < 2; ++a) {
      if (joint[x][a] > 0) mi += joint[x][a] * std::log(joint[x][a] / (px[x] * pa[a]));
    }
  }
  return mi;
}

// Consumer objective per forwarded item: action payoff minus lambda * MI.
inline double objective(const ModelParams& p, double qhat, double t0, double t1) {
  const double action =
      qhat * (1 - t0) * -p.c2 + (1 - qhat) * (t1 * -p.c1 + (1 - t1) * p.b);
  return action - p.lambda * mutual_information(qhat, t0, t1);
}

struct GridMax {
  double t0, t1, value;
};

// Best point of an n x n grid over [0,1]^2.
inline GridMax grid_max(const ModelParams& p, double qhat, int n) {
  GridMax best{0, 0, objective(p, qhat, 0, 0)};
  for (int i = 0; i < n; ++i) {
    for (int j = 0; j < n; ++j) {
      const double t0 = static_cast<double>(i) / (n - 1);
      const double t1 = static_cast<double>(j) / (n - 1);
      const double v = objective(p, qhat, t0, t1);
      if (v > best.value) best = {t0, t1, v};
    }
  }
  return best;
}

// Nested ternary search: the inner maximum over t1 of a jointly concave
// objective is concave in t0, so both levels are unimodal.
inline GridMax nested_max(const ModelParams& p, double qhat, int iterations = 90) {
  auto ternary = [&](auto&& f) {
    double lo = 0.0, hi = 1.0;
    for (int i = 0; i < iterations; ++i) {
      const double m1 = lo + (hi - lo) / 3.0, m2 = hi - (hi - lo) / 3.0;
      if (f(m1) < f(m2)) {
        lo = m1;
      } else {
        hi = m2;
      }
    }
    double best = 0.5 * (lo + hi);
    for (double x : {0.0, 1.0}) {
      if (f(x) > f(best)) best = x;
    }
    return best;
  };
  auto inner = [&](double t0) {
    return ternary([&](double t1) { return objective(p, qhat, t0, t1); });
  };
  const double t0 = ternary([&](double x) { return objective(p, qhat, x, inner(x)); });
  const double t1 = inner(t0);
  return {t0, t1, objective(p, qhat, t0, t1)};
}

// Exact expectations per content item for filter strategy (g0, g1) against
// consumer channel (t0, t1) charged `cost` per forwarded item.
struct Expectation {
  double action;    // expected action payoff
  double cost;      // expected information cost
  double attacker;  // P[X = 0, forwarded, accepted]
};

inline Expectation expectation(const ModelParams& p, double g0, double g1, double t0, double t1,
                               double cost) {
  Expectation e{0, 0, 0};
  for (int x = 0; x < 2; ++x) {
    const double px = x == 0 ? p.q : 1.0 - p.q;
    const double s0 = x == 0 ? p.pi0 : p.pi1;
    const double ignore = x == 0 ? t0 : t1;
    for (int sig = 0; sig < 2; ++sig) {
      const double ps = sig == 0 ? s0 : 1.0 - s0;
      const double block = sig == 0 ? g0 : g1;
      const double lost = x == 0 ? 0.0 : -p.c1;
      const double accepted = x == 0 ? -p.c2 : p.b;
      const double w = px * ps;
      e.action += w * block * lost;
      e.action += w * (1 - block) * (ignore * lost + (1 - ignore) * accepted);
      e.cost += w * (1 - block) * cost;
      if (x == 0) e.attacker += w * (1 - block) * (1 - ignore);
    }
  }
  return e;
}

// Random valid parameter sets with moderate magnitudes.
class ParamSampler {
 public:
  explicit ParamSampler(std::uint64_t seed) : rng_(seed) {}

  double uniform(double lo, double hi) {
    return std::uniform_real_distribution<double>(lo, hi)(rng_);
  }

  ModelParams draw() {
    ModelParams p;
    p.q = uniform(0.05, 0.95);
    p.pi1 = uniform(0.02, 0.9);
    p.pi0 = uniform(p.pi1, 0.98);
    p.b = uniform(0.2, 5.0);
    p.c1 = uniform(0.2, 5.0);
    p.c2 = uniform(0.2, 5.0);
    p.lambda = uniform(0.3, 5.0);
    return p;
  }

  std::mt19937_64& engine() { return rng_; }

 private:
  std::mt19937_64 rng_;
};

}  // namespace brute

#endif  // FILTERGAME_TESTS_SUPPORT_BRUTE_HPP_
