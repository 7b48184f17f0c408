// Copyright 2026 The selgame Authors.
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

#include "selgame/no_recall.h"

#include <algorithm>
#include <cmath>

#include "selgame/errors.h"
#include "selgame/prophet.h"
#include "selgame/stage_games.h"

namespace selgame {
namespace {

constexpr int kMaxArrivals = 10000;

void CheckArrivals(int n) {
  if (n < 1) Fail(ErrorCode::kArgument, "n must be >= 1");
  if (n > kMaxArrivals) Fail(ErrorCode::kResource, "n larger than 10000");
}

NoRecallSummary NextStage(const Distribution& d, const NoRecallSummary& s,
                          const std::vector<double>& c) {
  const double cn = s.c();
  // The mixed branch denominator c + a - 2 beta exceeds c - beta on (beta, c).
  if (s.beta > cn + 1e-12) {
    Fail(ErrorCode::kInconsistent, "no-recall recursion: beta exceeds c");
  }
  std::vector<double> cuts = {0.0,
                              1.0,
                              s.alpha_prime,
                              s.alpha,
                              s.beta,
                              cn,
                              2.0 * s.beta - cn,
                              2.0 * s.alpha - cn};
  for (double& x : cuts) x = std::clamp(x, 0.0, 1.0);
  std::sort(cuts.begin(), cuts.end());
  cuts.erase(std::unique(cuts.begin(), cuts.end()), cuts.end());

  NoRecallSummary out;
  out.n = s.n + 1;
  out.prophet.assign(c.begin(), c.begin() + out.n + 1);
  double ap = 0.0, tb = 0.0, ta = 0.0;
  for (size_t i = 0; i + 1 < cuts.size(); ++i) {
    const double lo = cuts[i], hi = cuts[i + 1];
    // Integrands are smooth inside each piece.
    ap += d.partial_expectation(
        lo, hi, [&](double a) { return PerValueSelectors(s, a).alpha_prime; });
    tb += d.partial_expectation(
        lo, hi, [&](double a) { return PerValueSelectors(s, a).two_beta; });
    ta += d.partial_expectation(
        lo, hi, [&](double a) { return PerValueSelectors(s, a).two_alpha; });
  }
  out.alpha_prime = ap;
  out.beta = 0.5 * tb;
  out.alpha = 0.5 * ta;
  return out;
}

}  // namespace

double MixedPayoff(double a, double c, double beta) {
  const double den = c + a - 2.0 * beta;
  if (!(den > 0.0)) {
    Fail(ErrorCode::kInconsistent, "mixed stage payoff: non-positive denominator");
  }
  return (2.0 * a * c - beta * (a + c)) / den;
}

ValueSelectors PerValueSelectors(const NoRecallSummary& s, double a) {
  const double c = s.c();
  ValueSelectors v;
  if (a < s.alpha_prime) {
    v.alpha_prime = s.alpha_prime;
  } else if (a < c) {
    v.alpha_prime = a;
  } else {
    v.alpha_prime = 0.5 * (a + c);
  }
  if (a < s.alpha_prime) {
    v.two_beta = 2.0 * s.beta;
  } else if (a < s.beta) {
    v.two_beta = std::max(a + c, 2.0 * s.beta);
  } else {
    v.two_beta = a + c;
  }
  if (a < s.alpha_prime) {
    v.two_alpha = 2.0 * s.alpha;
  } else if (a < s.alpha) {
    v.two_alpha = std::min(2.0 * s.alpha, a + c);
  } else if (a < s.beta) {
    v.two_alpha = 2.0 * a;
  } else if (a < c) {
    v.two_alpha = 2.0 * MixedPayoff(a, c, s.beta);
  } else {
    v.two_alpha = a + c;
  }
  return v;
}

std::vector<NoRecallSummary> NoRecallSeries(const Distribution& d, int n) {
  CheckArrivals(n);
  if (!d.is_continuous()) {
    Fail(ErrorCode::kUnsupported,
         "no-recall recursion needs an atomless distribution");
  }
  const std::vector<double> c = ProphetValues(d, n);
  std::vector<NoRecallSummary> out;
  NoRecallSummary first;
  first.n = 1;
  first.alpha_prime = first.alpha = first.beta = 0.5 * d.mean();
  first.prophet = {c[0], c[1]};
  out.push_back(first);
  for (int k = 2; k <= n; ++k) out.push_back(NextStage(d, out.back(), c));
  return out;
}

NoRecallSummary SummarizeNoRecall(const Distribution& d, int n) {
  return NoRecallSeries(d, n).back();
}

std::vector<NoRecallSummary> UniformNoRecallSeries(int n) {
  CheckArrivals(n);
  std::vector<double> c(n + 1, 0.0);
  for (int k = 1; k <= n; ++k) c[k] = 0.5 * (1.0 + c[k - 1] * c[k - 1]);
  std::vector<NoRecallSummary> out;
  NoRecallSummary s;
  s.n = 1;
  s.alpha_prime = s.alpha = s.beta = 0.25;
  s.prophet = {c[0], c[1]};
  out.push_back(s);
  for (int k = 2; k <= n; ++k) {
    const NoRecallSummary& p = out.back();
    const double cp = c[k - 1], ap = p.alpha_prime, al = p.alpha, be = p.beta;
    NoRecallSummary q;
    q.n = k;
    q.prophet.assign(c.begin(), c.begin() + k + 1);
    q.alpha_prime = 0.5 * ap * ap + 0.5 * cp - 0.25 * cp * cp + 0.25;
    q.beta = 0.5 * (2.0 * be * ap + cp * (1.0 - ap) + 0.5 * (1.0 - ap * ap));
    q.alpha = 0.5 * (0.5 + 2.5 * cp * cp + 3.0 * be * be + cp - 6.0 * cp * be +
                     al * al - 4.0 * (cp - be) * (cp - be) * std::log(2.0));
    out.push_back(q);
  }
  return out;
}

double BestSingleTwoArrivals(const Distribution& d) {
  const double m = d.mean();
  const double half = 0.5 * m;
  auto best = [&](double x) {
    return SolveNoRecallStage<double>(x, m, half, half).max_single;
  };
  // The integrand jumps at m/2 and m.
  return d.partial_expectation(0.0, half, best, /*include_lower=*/true) +
         d.partial_expectation(half, m, best) +
         d.partial_expectation(m, 1.0, best);
}

}  // namespace selgame
