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

// Brute-force validators that share no closed forms with the analytic
// modules: numeric consumer optimization, Monte-Carlo simulation of the batch
// model, numeric attacker search, and a generic-cost value-of-technology run.

#ifndef FILTERGAME_ORACLE_HPP_
#define FILTERGAME_ORACLE_HPP_

#include <algorithm>
#include <cmath>
#include <cstdint>
#include <functional>
#include <stdexcept>
#include <string>
#include <vector>

#include "filtergame/beliefs.hpp"
#include "filtergame/consumer.hpp"
#include "filtergame/numeric.hpp"
#include "filtergame/parallel.hpp"
#include "filtergame/params.hpp"
#include "filtergame/payoffs.hpp"

namespace filtergame {

// Information cost C(pi_tilde0, pi_tilde1; belief) per forwarded item.
using GenericCost = std::function<double(double pi_tilde0, double pi_tilde1, double belief)>;

struct OracleConfig {
  int grid_resolution = 400;        // points per axis, >= 10
  int refine_iters = 60;            // golden-section steps per line search
  std::int64_t mc_samples = 1000000;  // >= 1000
  std::uint64_t seed = 0x5eedf11e7ULL;
  GenericCost cost;                 // empty: lambda times mutual information
};

inline void require_valid(const OracleConfig& cfg) {
  if (cfg.grid_resolution < 10) throw std::invalid_argument("grid_resolution must be >= 10");
  if (cfg.refine_iters < 1) throw std::invalid_argument("refine_iters must be >= 1");
  if (cfg.mc_samples < 1000) throw std::invalid_argument("mc_samples must be >= 1000");
}

// Shannon cost written as a generic cost, for cross-checking the two paths.
inline GenericCost shannon_cost(const ModelParams& p) {
  const double lambda = p.lambda;
  return [lambda](double t0, double t1, double belief) {
    return lambda * mutual_information(belief, t0, t1);
  };
}

// SplitMix64. Content item i of a run seeded with s draws from the stream
// whose state starts at mix(s ^ mix(i + 1)), so every item's draws depend
// only on (s, i) and never on how items are scheduled.
class SplitMix64 {
 public:
  explicit SplitMix64(std::uint64_t state) : state_(state) {}

  static std::uint64_t mix(std::uint64_t z) {
    z = (z ^ (z >> 30)) * 0xbf58476d1ce4e5b9ULL;
    z = (z ^ (z >> 27)) * 0x94d049bb133111ebULL;
    return z ^ (z >> 31);
  }

  static SplitMix64 for_item(std::uint64_t seed, std::uint64_t index) {
    return SplitMix64(mix(seed ^ mix(index + 1)));
  }

  std::uint64_t next() {
    state_ += 0x9e3779b97f4a7c15ULL;
    return mix(state_);
  }

  // Uniform on [0, 1) with 53 random bits.
  double uniform() { return static_cast<double>(next() >> 11) * 0x1.0p-53; }

 private:
  std::uint64_t state_;
};

struct NumericPolicy {
  ConsumerPolicy policy;
  double objective = 0.0;  // achieved action payoff minus cost
  double grid_best = 0.0;  // best objective on the grid alone
};

namespace detail {

inline double cost_of(const ModelParams& p, const OracleConfig& cfg, double belief, double t0,
                      double t1) {
  return cfg.cost ? cfg.cost(t0, t1, belief) : p.lambda * mutual_information(belief, t0, t1);
}

inline constexpr double kNoInformationCost = 1e-12;
inline constexpr int kMaxRefineSweeps = 400;
// Logit coordinates span [-kLogitRange, kLogitRange]; sigmoid(-40) ~ 4e-18.
inline constexpr double kLogitRange = 40.0;

}  // namespace detail

// Maximizes action payoff minus cost over [0,1]^2. A linear grid and a grid
// in logit coordinates seed the search; the logit grid resolves optima that
// sit within a grid step of an edge, where the cost can be log-singular.
// Refinement then repeats golden-section line searches in logit coordinates
// along both axes, both diagonals, and the last sweep's net displacement.
// Only strict improvements are accepted, so exact corners survive.
inline NumericPolicy numeric_consumer_br(const ModelParams& p, double belief,
                                         const OracleConfig& cfg = {}) {
  require_open_belief(belief);
  require_valid(cfg);
  auto f = [&](double t0, double t1) {
    return action_payoff(p, belief, t0, t1) - detail::cost_of(p, cfg, belief, t0, t1);
  };
  constexpr double kRange = detail::kLogitRange;
  auto sigmoid = [](double u) { return 1.0 / (1.0 + std::exp(-u)); };
  auto logit = [&](double t) {
    if (t <= 0.0) return -kRange;
    if (t >= 1.0) return kRange;
    return std::clamp(std::log(t / (1.0 - t)), -kRange, kRange);
  };

  const int n = cfg.grid_resolution;
  double x0 = 0.0, x1 = 0.0, best = f(0.0, 0.0);
  auto consider = [&](double t0, double t1) {
    const double v = f(t0, t1);
    if (v > best) {
      best = v;
      x0 = t0;
      x1 = t1;
    }
  };
  for (int i = 0; i < n; ++i) {
    for (int j = 0; j < n; ++j) {
      consider(static_cast<double>(i) / (n - 1), static_cast<double>(j) / (n - 1));
    }
  }
  NumericPolicy out;
  out.grid_best = best;
  std::vector<double> edge_grid(static_cast<std::size_t>(n));
  for (int i = 0; i < n; ++i) edge_grid[i] = sigmoid(-kRange + 2.0 * kRange * i / (n - 1));
  for (double t0 : edge_grid) {
    for (double t1 : edge_grid) consider(t0, t1);
  }

  // Moves the incumbent to the best point on the line through logit(x) in
  // direction d, clipped to the logit box.
  auto line_search = [&](double d0, double d1) {
    const double u0 = logit(x0), u1 = logit(x1);
    double lo = -INFINITY, hi = INFINITY;
    auto clip = [&](double u, double d) {
      if (d > 0.0) {
        lo = std::max(lo, (-kRange - u) / d);
        hi = std::min(hi, (kRange - u) / d);
      } else if (d < 0.0) {
        lo = std::max(lo, (kRange - u) / d);
        hi = std::min(hi, (-kRange - u) / d);
      }
    };
    clip(u0, d0);
    clip(u1, d1);
    if (!(hi > lo)) return;
    const auto m = golden_section_max(
        [&](double s) { return f(sigmoid(u0 + s * d0), sigmoid(u1 + s * d1)); }, lo, hi,
        cfg.refine_iters);
    if (m.value > best) {
      best = m.value;
      x0 = sigmoid(u0 + m.x * d0);
      x1 = sigmoid(u1 + m.x * d1);
    }
  };

  for (int sweep = 0; sweep < detail::kMaxRefineSweeps; ++sweep) {
    const double start0 = logit(x0), start1 = logit(x1), start_value = best;
    line_search(1.0, 0.0);
    line_search(0.0, 1.0);
    line_search(1.0, 1.0);
    line_search(1.0, -1.0);
    const double move0 = logit(x0) - start0, move1 = logit(x1) - start1;
    if (move0 != 0.0 || move1 != 0.0) line_search(move0, move1);
    if (!(best > start_value)) break;
  }

  ConsumerPolicy& c = out.policy;
  c.belief = belief;
  c.pi_tilde0 = x0;
  c.pi_tilde1 = x1;
  c.p_accept = 1.0 - (belief * x0 + (1.0 - belief) * x1);
  c.info_cost = detail::cost_of(p, cfg, belief, x0, x1);
  if (c.info_cost > detail::kNoInformationCost) {
    c.mode = ConsumerMode::kInterior;
  } else {
    c.mode = c.p_accept >= 0.5 ? ConsumerMode::kAcceptAll : ConsumerMode::kIgnoreAll;
  }
  out.objective = best;
  return out;
}

struct Estimate {
  double mean = 0.0;
  double std_error = 0.0;
};

struct MonteCarloResult {
  Estimate filter;
  Estimate consumer;
  Estimate attacker;  // accepted malicious items per batch
  std::int64_t samples = 0;
};

namespace detail {

// Welford accumulator with Chan's pairwise merge.
struct RunningStats {
  std::int64_t n = 0;
  double mean = 0.0;
  double m2 = 0.0;

  void add(double x) {
    ++n;
    const double delta = x - mean;
    mean += delta / static_cast<double>(n);
    m2 += delta * (x - mean);
  }

  void merge(const RunningStats& o) {
    if (o.n == 0) return;
    if (n == 0) {
      *this = o;
      return;
    }
    const double total = static_cast<double>(n + o.n);
    const double delta = o.mean - mean;
    mean += delta * static_cast<double>(o.n) / total;
    m2 += o.m2 + delta * delta * static_cast<double>(n) * static_cast<double>(o.n) / total;
    n += o.n;
  }

  Estimate estimate(double scale) const {
    const double var = n > 1 ? m2 / static_cast<double>(n - 1) : 0.0;
    return {mean * scale, std::sqrt(var / static_cast<double>(n)) * std::abs(scale)};
  }
};

inline constexpr std::int64_t kMonteCarloChunk = 65536;

}  // namespace detail

// Simulates cfg.mc_samples content items. Each item draws, in order: its
// type, the filter's signal, the filter's block decision, and the consumer's
// ignore decision. Action payoffs come from the utility matrix; the consumer
// is charged the policy's analytic info cost on every forwarded item. Chunks
// are reduced in index order, so results are bit-identical for any thread
// count.
inline MonteCarloResult monte_carlo_payoff(const ModelParams& p, const FilterStrategy& s,
                                           const ConsumerPolicy& consumer, Utilities u,
                                           const OracleConfig& cfg = {},
                                           Normalization n = Normalization::kPerClean) {
  require_valid(p);
  require_valid(cfg);
  const auto r = UtilityMatrix::from(p);
  const std::int64_t total = cfg.mc_samples;
  const std::int64_t chunks = (total + detail::kMonteCarloChunk - 1) / detail::kMonteCarloChunk;
  struct ChunkStats {
    detail::RunningStats filter, consumer, attacker;
  };
  std::vector<ChunkStats> parts(static_cast<std::size_t>(chunks));

  parallel_for(parts.size(), [&](std::size_t k) {
    const std::int64_t begin = static_cast<std::int64_t>(k) * detail::kMonteCarloChunk;
    const std::int64_t end = std::min(total, begin + detail::kMonteCarloChunk);
    ChunkStats& st = parts[k];
    for (std::int64_t i = begin; i < end; ++i) {
      auto rng = SplitMix64::for_item(cfg.seed, static_cast<std::uint64_t>(i));
      const bool malicious = rng.uniform() < p.q;
      const bool signal0 = rng.uniform() < (malicious ? p.pi0 : p.pi1);
      const bool blocked = rng.uniform() < (signal0 ? s.gamma0() : s.gamma1());
      const bool ignored = rng.uniform() < (malicious ? consumer.pi_tilde0 : consumer.pi_tilde1);
      double action = 0.0;
      double cost = 0.0;
      double hit = 0.0;
      if (blocked) {
        action = malicious ? r.lost_malicious : r.lost_clean;
      } else {
        cost = consumer.info_cost;
        if (malicious) {
          action = ignored ? r.lost_malicious : r.accept_malicious;
          hit = ignored ? 0.0 : 1.0;
        } else {
          action = ignored ? r.lost_clean : r.accept_clean;
        }
      }
      st.consumer.add(action - cost);
      st.filter.add(u == Utilities::kAligned ? action - cost : action);
      st.attacker.add(hit);
    }
  });

  ChunkStats all;
  for (const auto& part : parts) {
    all.filter.merge(part.filter);
    all.consumer.merge(part.consumer);
    all.attacker.merge(part.attacker);
  }
  const double scale = normalization_scale(p, n);
  MonteCarloResult out;
  out.samples = total;
  out.filter = all.filter.estimate(scale);
  out.consumer = all.consumer.estimate(scale);
  out.attacker = all.attacker.estimate(1.0 / (1.0 - p.q));
  return out;
}

inline constexpr double kAttackerRateMin = 1e-12;
inline constexpr double kAttackerRateMax = 1e12;
inline constexpr int kAttackerSearchIters = 120;

// Golden-section search over log(rho0) on [1e-12, 1e12] of the attacker's
// payoff. The consumer uses the closed-form best response at every candidate
// rate; only the attacker's inversion is under test.
inline double numeric_attacker_br(const ModelParams& p, const FilterStrategy& s) {
  if (s.kind() == StrategyKind::kBlock) {
    throw std::domain_error("attacker best response undefined under block-all");
  }
  require_valid(p.with_q(0.5));
  auto payoff = [&](double log_rho) {
    const double rho = std::exp(log_rho);
    const auto at = p.with_q(ModelParams::q_from_rho0(rho));
    const auto eff = equivalent_signal_quality(at, s);
    const auto belief = posterior(at, s).value;
    const auto c = best_response(at, belief);
    return rho * (1.0 - eff.pi0) * (1.0 - c.pi_tilde0);
  };
  const auto m = golden_section_max(payoff, std::log(kAttackerRateMin),
                                    std::log(kAttackerRateMax), kAttackerSearchIters);
  return std::exp(m.x);
}

// Generic-cost counterpart of the aligned Differentiate MVoT.
struct GenericCostDemo {
  double d_pi0 = 0.0;
  double d_pi1 = 0.0;
  double v_dif = 0.0;        // per clean item
  double v_fwd = 0.0;        // per clean item
  double info_cost = 0.0;    // per forwarded item under Differentiate
  bool positive_info_cost = false;
  bool dif_optimal = false;
  bool expected_signs = false;  // d_pi0 > 0 and d_pi1 < 0
};

inline constexpr int kCostProbes = 10;
inline constexpr double kCostProbeTolerance = 1e-12;
inline constexpr double kInformativeGap = 0.1;

// Spot-checks the generic-cost assumptions at random points: convex in the
// channel, concave in the belief, zero on uninformative channels and
// positive on informative ones. Throws std::invalid_argument on failure.
inline void check_cost_assumptions(const GenericCost& cost, std::uint64_t seed) {
  if (!cost) throw std::invalid_argument("generic cost model is empty");
  SplitMix64 rng(SplitMix64::mix(seed));
  auto interior = [&] { return 0.02 + 0.96 * rng.uniform(); };
  for (int k = 0; k < kCostProbes; ++k) {
    const double a0 = rng.uniform(), a1 = rng.uniform();
    const double b0 = rng.uniform(), b1 = rng.uniform();
    const double q = interior();
    const double mid = cost(0.5 * (a0 + b0), 0.5 * (a1 + b1), q);
    const double chord = 0.5 * (cost(a0, a1, q) + cost(b0, b1, q));
    if (mid > chord + kCostProbeTolerance * (1.0 + std::abs(chord))) {
      throw std::invalid_argument("cost model is not convex in the information strategy");
    }
    const double qa = interior(), qb = interior();
    const double at_mid = cost(a0, a1, 0.5 * (qa + qb));
    const double belief_chord = 0.5 * (cost(a0, a1, qa) + cost(a0, a1, qb));
    if (at_mid < belief_chord - kCostProbeTolerance * (1.0 + std::abs(belief_chord))) {
      throw std::invalid_argument("cost model is not concave in the belief");
    }
    const double t = rng.uniform();
    if (std::abs(cost(t, t, q)) > kCostProbeTolerance) {
      throw std::invalid_argument("cost model charges for an uninformative strategy");
    }
    const double lo = rng.uniform() * (1.0 - kInformativeGap);
    const double hi = lo + kInformativeGap + rng.uniform() * (1.0 - kInformativeGap - lo);
    if (!(cost(hi, lo, q) > 0.0)) {
      throw std::invalid_argument("cost model is zero on an informative strategy");
    }
  }
}

// Optimizes the consumer numerically under `cost` and takes central
// differences of the Differentiate welfare in pi0 and pi1.
inline GenericCostDemo generic_cost_vot_demo(const ModelParams& p, const GenericCost& cost,
                                             double step, const OracleConfig& base = {}) {
  require_valid(p);
  if (!(step > 0.0)) throw std::invalid_argument("step must be > 0");
  check_cost_assumptions(cost, base.seed);
  OracleConfig cfg = base;
  cfg.cost = cost;

  auto dif_welfare = [&](const ModelParams& pt) {
    if (auto v = validate(pt); !v.empty()) {
      throw std::invalid_argument("step leaves the valid region (" + describe(v) + ")");
    }
    const auto belief = differentiate_posterior(pt);
    const auto br = numeric_consumer_br(pt, belief.value, cfg);
    return (-pt.c1 * (1.0 - pt.q) * pt.pi1 + belief.forward_prob * br.objective) / (1.0 - pt.q);
  };

  GenericCostDemo out;
  const auto at_dif = numeric_consumer_br(p, differentiate_posterior(p).value, cfg);
  out.info_cost = at_dif.policy.info_cost;
  out.v_dif = dif_welfare(p);
  out.v_fwd = numeric_consumer_br(p, p.q, cfg).objective / (1.0 - p.q);
  out.d_pi0 = (dif_welfare(p.with_signal(p.pi0 + step, p.pi1)) -
               dif_welfare(p.with_signal(p.pi0 - step, p.pi1))) /
              (2.0 * step);
  out.d_pi1 = (dif_welfare(p.with_signal(p.pi0, p.pi1 + step)) -
               dif_welfare(p.with_signal(p.pi0, p.pi1 - step))) /
              (2.0 * step);
  out.positive_info_cost = out.info_cost > detail::kNoInformationCost;
  out.dif_optimal = out.v_dif > out.v_fwd;
  out.expected_signs = out.d_pi0 > 0.0 && out.d_pi1 < 0.0;
  return out;
}

}  // namespace filtergame

#endif  // FILTERGAME_ORACLE_HPP_
