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

#ifndef SELGAME_FULL_RECALL_H_
#define SELGAME_FULL_RECALL_H_

#include <array>
#include <functional>
#include <memory>
#include <mutex>

#include "selgame/distribution.h"

namespace selgame {

struct GridConfig {
  int points = 1001;
  double quad_tol = 1e-10;
};

enum class FrMethod { kAuto, kAnalytic, kExact, kGrid };

using Pair = std::array<double, 2>;

// Two value channels over full-recall states (a, b), a >= b the two best
// available values with k arrivals to come:
//   V_0(a, b) = (a + b) / 2,
//   V_k(a, b) = rule(k, a, b, E(X_(k) v b), E V_{k-1}(a v X, med[a, b, X])).
using StageRule =
    std::function<Pair(int k, double a, double b, double c, const Pair& cont)>;

class PairRecursion {
 public:
  virtual ~PairRecursion() = default;
  // Makes stages 1..n available.
  virtual void Extend(int n) = 0;
  virtual int depth() const = 0;
  virtual Pair value(int k, double a, double b) const = 0;
  virtual Pair continuation(int k, double a, double b) const = 0;
  // E(max of k draws v b).
  virtual double lone_value(int k, double b) const = 0;
};

// Triangle grid on {0 <= b <= a <= 1}. Only the part of the continuation
// that is continuous in (a, b) is tabulated; thresholds are evaluated
// exactly at query points.
std::unique_ptr<PairRecursion> MakeGridRecursion(const Distribution& d,
                                                 GridConfig grid,
                                                 StageRule rule);
// Exact state recursion for purely discrete laws.
std::unique_ptr<PairRecursion> MakeAtomicRecursion(const Distribution& d,
                                                   StageRule rule);

// Channels (worst, best) of the symmetric equilibrium payoff.
StageRule WorstBestRule();

struct FullRecallBand {
  int n = 0;
  double l = 0.0;
  double h = 0.0;
};

class FullRecallSolver {
 public:
  explicit FullRecallSolver(const Distribution& d, GridConfig grid = {},
                            FrMethod method = FrMethod::kAuto);

  // (l_n(a, b), h_n(a, b)).
  Pair lh(int n, double a, double b);
  FullRecallBand band(int n);
  // Continuations (d^-_n(a, b), d^+_n(a, b)).
  Pair continuation(int n, double a, double b);
  // Numerical engine extended to n stages; never the closed forms.
  const PairRecursion& engine(int n);
  FrMethod method_for(int n) const;
  const Distribution& distribution() const { return d_; }
  const GridConfig& grid() const { return grid_; }

 private:
  Distribution d_;
  GridConfig grid_;
  FrMethod method_;
  std::mutex mu_;
  std::unique_ptr<PairRecursion> engine_;
};

// Process-wide cache of solvers keyed by distribution and grid.
std::shared_ptr<FullRecallSolver> SharedFullRecallSolver(const Distribution& d,
                                                         GridConfig grid = {});

Pair LhValues(const Distribution& d, int n, double a, double b,
              GridConfig grid = {});
FullRecallBand Band(const Distribution& d, int n, GridConfig grid = {});

// Uniform law, n in {1, 2, 3}: exact piecewise (l_n(a, b), h_n(a, b)).
Pair UniformClosedForms(int n, double a, double b);
// Root of a = (1 + a^2)/2 - a^3/6 in (0, 1).
double UniformBestThreshold();

}  // namespace selgame

#endif  // SELGAME_FULL_RECALL_H_
