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

#ifndef FILTERGAME_NUMERIC_HPP_
#define FILTERGAME_NUMERIC_HPP_

#include <cmath>
#include <stdexcept>
#include <utility>

namespace filtergame {

// x ln x with the 0 ln 0 := 0 convention.
inline double xlogx(double x) { return x > 0.0 ? x * std::log(x) : 0.0; }

// Binary entropy in nats. Exactly zero at p = 0 and p = 1.
inline double binary_entropy(double p) {
  if (p <= 0.0 || p >= 1.0) return 0.0;
  return -xlogx(p) - xlogx(1.0 - p);
}

// KL(Bernoulli(p) || Bernoulli(r)) in nats.
inline double kl_bernoulli(double p, double r) {
  if (!(p >= 0.0 && p <= 1.0)) {
    throw std::domain_error("kl_bernoulli: p must lie in [0,1]");
  }
  if (!(r > 0.0 && r < 1.0)) {
    throw std::domain_error("kl_bernoulli: r must lie in (0,1)");
  }
  double kl = 0.0;
  if (p > 0.0) kl += p * std::log(p / r);
  if (p < 1.0) kl += (1.0 - p) * std::log((1.0 - p) / (1.0 - r));
  return kl;
}

// KL(Bernoulli(p) || Bernoulli(r)) with 1 - r supplied by the caller, for
// r so close to 1 that computing 1 - r would cancel.
inline double kl_bernoulli(double p, double r, double r_complement) {
  if (!(p >= 0.0 && p <= 1.0)) {
    throw std::domain_error("kl_bernoulli: p must lie in [0,1]");
  }
  if (!(r > 0.0 && r_complement > 0.0)) {
    throw std::domain_error("kl_bernoulli: r must lie in (0,1)");
  }
  double kl = 0.0;
  if (p > 0.0) kl += p * std::log(p / r);
  if (p < 1.0) kl += (1.0 - p) * std::log((1.0 - p) / r_complement);
  return kl;
}

struct LineMax {
  double x = 0.0;
  double value = 0.0;
};

// Golden-section search for the maximum of a unimodal function on [lo, hi].
// Ties keep the left sub-interval, so flat tails on the right are harmless.
template <typename F>
LineMax golden_section_max(F&& f, double lo, double hi, int iterations) {
  constexpr double kInvPhi = 0.6180339887498949;
  double a = lo;
  double b = hi;
  double c = b - kInvPhi * (b - a);
  double d = a + kInvPhi * (b - a);
  double fc = f(c);
  double fd = f(d);
  for (int i = 0; i < iterations; ++i) {
    if (fc >= fd) {
      b = d;
      d = c;
      fd = fc;
      c = b - kInvPhi * (b - a);
      fc = f(c);
    } else {
      a = c;
      c = d;
      fc = fd;
      d = a + kInvPhi * (b - a);
      fd = f(d);
    }
  }
  LineMax best{a, f(a)};
  if (fc > best.value) best = {c, fc};
  if (fd > best.value) best = {d, fd};
  if (const double fb = f(b); fb > best.value) best = {b, fb};
  return best;
}

// Bisection for the boundary of a monotone predicate on [lo, hi] where
// pred(lo) != pred(hi). Returns the point adjacent to the switch, on the
// side where pred is true, after `iterations` halvings.
template <typename Pred>
double bisect_boundary(Pred&& pred, double lo, double hi, int iterations = 200) {
  const bool at_lo = pred(lo);
  if (at_lo == pred(hi)) {
    throw std::invalid_argument("bisect_boundary: predicate does not change sign");
  }
  for (int i = 0; i < iterations; ++i) {
    const double mid = 0.5 * (lo + hi);
    if (mid == lo || mid == hi) break;
    if (pred(mid) == at_lo) {
      lo = mid;
    } else {
      hi = mid;
    }
  }
  return at_lo ? lo : hi;
}

}  // namespace filtergame

#endif  // FILTERGAME_NUMERIC_HPP_
