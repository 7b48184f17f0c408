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

#ifndef SELGAME_EFFICIENCY_H_
#define SELGAME_EFFICIENCY_H_

#include <vector>

#include "selgame/distribution.h"
#include "selgame/full_recall.h"
#include "selgame/stage_games.h"

namespace selgame {

struct RatioReport {
  Variant variant = Variant::kNoRecall;
  int n = 0;
  double poa = 1.0;
  double pos = 1.0;
  double pr = 1.0;
  // Numerators: best feasible sum (s_n without recall, the top-two
  // expectation with recall) and the top-two expectation.
  double max_sum = 0.0;
  double top_two = 0.0;
  // Denominators: worst and best equilibrium payoff sums.
  double worst_sum = 0.0;
  double best_sum = 0.0;
};

RatioReport Ratios(const Distribution& d, int n, Variant variant,
                   GridConfig grid = {});

// No-recall reports for n = 2..n_max from one pass of the recursion.
std::vector<RatioReport> NoRecallRatioSeries(const Distribution& d, int n_max);

struct TwoArrivalForms {
  double pos2 = 1.0;
  double poa2 = 1.0;
  double two_beta = 0.0;
  double two_alpha = 0.0;
};

// Direct integrals for two arrivals; atoms allowed.
TwoArrivalForms TwoArrivalClosedForms(const Distribution& d);

// (1 - eta) * {eps - eps^2 w.p. 1 - eps, 1 w.p. eps} + eta * U[0, 1].
Distribution TightnessFamily(double epsilon, double eta);

}  // namespace selgame

#endif  // SELGAME_EFFICIENCY_H_
