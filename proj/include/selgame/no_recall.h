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

#ifndef SELGAME_NO_RECALL_H_
#define SELGAME_NO_RECALL_H_

#include <vector>

#include "selgame/distribution.h"

namespace selgame {

// Equilibrium values of the no-recall game with n arrivals.
struct NoRecallSummary {
  int n = 0;
  // Worst single-player payoff.
  double alpha_prime = 0.0;
  // Half the worst and half the best payoff sum.
  double alpha = 0.0;
  double beta = 0.0;
  // c_0..c_n.
  std::vector<double> prophet;

  double c() const { return prophet.at(n); }
};

// Entry k-1 holds the summary for k arrivals, k = 1..n. Requires an atomless
// law.
std::vector<NoRecallSummary> NoRecallSeries(const Distribution& d, int n);
NoRecallSummary SummarizeNoRecall(const Distribution& d, int n);

// Same values for the uniform law from the explicit polynomial/log
// recursions.
std::vector<NoRecallSummary> UniformNoRecallSeries(int n);

struct ValueSelectors {
  double alpha_prime = 0.0;
  double two_beta = 0.0;
  double two_alpha = 0.0;
};

// Integrands of the next stage: extreme stage-game values when the next
// arrival is a and the continuation is drawn from the set at stage s.n.
ValueSelectors PerValueSelectors(const NoRecallSummary& s, double a);

// Payoff in the mixed stage equilibrium where both players continue with
// beta: (2ac - beta(a + c)) / (a + c - 2 beta). Defined for a > beta.
double MixedPayoff(double a, double c, double beta);

// Best single-player payoff with two arrivals. Works for any law since the
// one-arrival set is the single point (m/2, m/2).
double BestSingleTwoArrivals(const Distribution& d);

}  // namespace selgame

#endif  // SELGAME_NO_RECALL_H_
