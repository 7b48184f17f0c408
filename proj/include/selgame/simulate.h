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

#ifndef SELGAME_SIMULATE_H_
#define SELGAME_SIMULATE_H_

#include <array>
#include <cstdint>
#include <memory>
#include <string>
#include <variant>
#include <vector>

#include "selgame/distribution.h"
#include "selgame/full_recall.h"
#include "selgame/no_recall.h"
#include "selgame/stage_games.h"

namespace selgame {

enum class Which { kBest, kWorst };

class FullRecallPolicy;
class NoRecallPlans;

struct AlwaysBid {};
// Never selects anything; also forgoes the lone continuation without recall.
struct NeverBid {};
// Bids iff the best available value is at least the lone value c.
struct ProphetThreshold {};
// thresholds[k]: bid iff the best available value is >= thresholds[k], k the
// number of arrivals still to come after the current one. Bids past the end.
struct ThresholdStrategy {
  std::vector<double> thresholds;
};
struct FullRecallSpe {
  std::shared_ptr<const FullRecallPolicy> policy;
};
struct NoRecallSpe {
  std::shared_ptr<const NoRecallPlans> plans;
  Which which = Which::kBest;
};

using Strategy = std::variant<AlwaysBid, NeverBid, ProphetThreshold,
                              ThresholdStrategy, FullRecallSpe, NoRecallSpe>;

std::string StrategyName(const Strategy& s);

// Symmetric full-recall equilibrium with k arrivals to come at state
// (a, b): the worst one bids iff a > c_k(b), the best iff
// a > max(c_k(b), d^+_k(a, b)).
class FullRecallPolicy {
 public:
  FullRecallPolicy(const Distribution& d, int n, Which which,
                   GridConfig grid = {});

  bool Bids(int k, double a, double b) const;
  double LoneValue(int k, double b) const;
  // Smallest a in [b, 1] at which Bids holds (1 if none), by bisection.
  double Threshold(int k, double b) const;

  int n() const { return n_; }
  Which which() const { return which_; }
  const Distribution& distribution() const { return d_; }

 private:
  Distribution d_;
  int n_;
  Which which_;
  std::shared_ptr<FullRecallSolver> solver_;
  const PairRecursion* engine_ = nullptr;
};

// Strategy profiles for the no-recall game on an atomless law.
//
// A plan at level r (arrivals left, the current one included) is either
// "worst for player i" or diagonal D(x), x in [alpha_r, beta_r], whose
// payoff is (x, x). D(x) follows the worst-sum rule for arrivals below a
// cut t and the best-sum rule above it, with t chosen so the sum is 2x.
// Regions where a single designated player takes are split between the
// players so that both get the same expected amount.
class NoRecallPlans {
 public:
  enum class Kind { kWorstFor1, kWorstFor2, kDiagonal };
  struct Plan {
    Kind kind = Kind::kDiagonal;
    int level = 0;
    double x = 0.0;
  };
  struct Prescription {
    std::array<double, 2> bid{};
    // Continuation if both pass as prescribed.
    Plan next;
  };
  struct Level {
    // Values at this level.
    double ap = 0.0, al = 0.0, be = 0.0, w = 0.0;
    // Previous level and the lone value used by this level's stage game.
    double pap = 0.0, pal = 0.0, pbe = 0.0, c = 0.0;
    std::vector<double> nodes;
    // Integral over [0, node] of (two_alpha(a) - two_beta(a)) dF.
    std::vector<double> cum_gap;
    // Integral over [0, node] of (a - c) dF.
    std::vector<double> cum_adv;
  };

  NoRecallPlans(const Distribution& d, int n, int table_points = 4001);

  int n() const { return n_; }
  const Distribution& distribution() const { return d_; }
  const Level& level(int r) const { return levels_.at(r); }

  Plan Start(Which which) const;
  Prescription Prescribe(const Plan& p, double a) const;
  // Continuation after both passed at a: a designated lone bidder who
  // passed is punished with the plan worst for them.
  Plan AfterBothPass(const Plan& p, double a) const;
  double Payoff(const Plan& p, int seat) const;
  // Region boundaries of the plan's stage rule, sorted, inside [0, 1].
  std::vector<double> Cuts(const Plan& p) const;
  // Cut t realizing D(x) at level r.
  double DiagonalCut(int r, double x) const;

 private:
  double Interp(const Level& L, const std::vector<double>& ys, double a) const;
  double InvertCum(const Level& L, const std::vector<double>& ys,
                   double target) const;
  // Point splitting [lo, hi) into equal halves of the integral of (a - c) dF.
  double Split(const Level& L, double lo, double hi) const;

  Distribution d_;
  int n_;
  std::vector<Level> levels_;
};

Strategy SpeStrategy(const Distribution& d, int n, Variant variant,
                     Which which, GridConfig grid = {});

struct SimulationConfig {
  int64_t runs = 100000;
  uint64_t seed = 20240601;
};

struct SimulationReport {
  int64_t runs = 0;
  uint64_t seed = 0;
  std::array<double, 2> mean{};
  std::array<double, 2> stderr_{};
};

SimulationReport Play(const Distribution& d, int n, Variant variant,
                      const Strategy& s1, const Strategy& s2,
                      const SimulationConfig& config);

struct GapConfig {
  // Triangle grid for full recall on atomless laws.
  GridConfig grid{501, 1e-9};
  // Points on each level's diagonal for no-recall plans.
  int diagonal_points = 201;
};

struct GapReport {
  // Best-response value and value of playing the fixed strategy oneself.
  std::array<double, 2> best_response{};
  std::array<double, 2> profile{};
  // max over seats of best_response - profile.
  double gap = 0.0;
};

GapReport BestResponseGap(const Distribution& d, int n, Variant variant,
                          const Strategy& fixed, const GapConfig& config = {});

}  // namespace selgame

#endif  // SELGAME_SIMULATE_H_
