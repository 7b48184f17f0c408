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

#include "selgame/efficiency.h"

#include "selgame/errors.h"
#include "selgame/no_recall.h"
#include "selgame/prophet.h"

namespace selgame {
namespace {

double Ratio(double num, double den) {
  if (!(den > 0.0)) {
    Fail(ErrorCode::kDegenerate, "equilibrium payoff sum is zero");
  }
  return num / den;
}

RatioReport NoRecallReport(const Distribution& d, const NoRecallSummary& s,
                           double max_sum) {
  RatioReport r;
  r.variant = Variant::kNoRecall;
  r.n = s.n;
  r.max_sum = max_sum;
  r.top_two = d.top_two_expectation(s.n);
  r.worst_sum = 2.0 * s.alpha;
  r.best_sum = 2.0 * s.beta;
  r.poa = Ratio(r.max_sum, r.worst_sum);
  r.pos = Ratio(r.max_sum, r.best_sum);
  r.pr = Ratio(r.top_two, r.best_sum);
  return r;
}

}  // namespace

RatioReport Ratios(const Distribution& d, int n, Variant variant,
                   GridConfig grid) {
  if (n < 2) Fail(ErrorCode::kArgument, "ratios need n >= 2");
  if (variant == Variant::kNoRecall) {
    const NoRecallSummary s = SummarizeNoRecall(d, n);
    return NoRecallReport(d, s, MaxFeasibleSum(d, n)[n]);
  }
  const FullRecallBand band = Band(d, n, grid);
  RatioReport r;
  r.variant = Variant::kFullRecall;
  r.n = n;
  r.top_two = d.top_two_expectation(n);
  r.max_sum = r.top_two;
  r.worst_sum = 2.0 * band.l;
  r.best_sum = 2.0 * band.h;
  r.poa = Ratio(r.max_sum, r.worst_sum);
  r.pos = Ratio(r.max_sum, r.best_sum);
  r.pr = Ratio(r.top_two, r.best_sum);
  return r;
}

std::vector<RatioReport> NoRecallRatioSeries(const Distribution& d, int n_max) {
  if (n_max < 2) Fail(ErrorCode::kArgument, "series needs n_max >= 2");
  const std::vector<NoRecallSummary> series = NoRecallSeries(d, n_max);
  const std::vector<double> s = MaxFeasibleSum(d, n_max);
  std::vector<RatioReport> out;
  for (int n = 2; n <= n_max; ++n) {
    out.push_back(NoRecallReport(d, series[n - 1], s[n]));
  }
  return out;
}

TwoArrivalForms TwoArrivalClosedForms(const Distribution& d) {
  const double m = d.mean();
  if (!(m > 0.0)) Fail(ErrorCode::kDegenerate, "mean is zero");
  const double half = 0.5 * m;
  TwoArrivalForms out;
  auto id = [](double x) { return x; };
  out.two_beta = m + d.partial_expectation(half, 1.0, id, /*include_lower=*/true);
  out.two_alpha =
      2.0 * m - d.partial_expectation(0.0, half, id, /*include_lower=*/true) -
      d.partial_expectation(half, m, [&](double a) {
        return a - 2.0 * m + m * m / a;
      });
  out.pos2 = 2.0 * m / out.two_beta;
  out.poa2 = 2.0 * m / out.two_alpha;
  return out;
}

Distribution TightnessFamily(double epsilon, double eta) {
  if (!(epsilon > 0.0 && epsilon < 0.5)) {
    Fail(ErrorCode::kArgument, "epsilon must lie in (0, 1/2)");
  }
  if (!(eta > 0.0 && eta < 1.0)) {
    Fail(ErrorCode::kArgument, "eta must lie in (0, 1)");
  }
  const Distribution base = Distribution::Discrete(
      {Atom{epsilon - epsilon * epsilon, 1.0 - epsilon, "", ""},
       Atom{1.0, epsilon, "", ""}});
  return Distribution::Mixture(eta, base);
}

}  // namespace selgame
