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

#include <cmath>
#include <random>

#include "doctest.h"
#include "selgame/errors.h"
#include "selgame/full_recall.h"
#include "selgame/no_recall.h"
#include "selgame/prophet.h"
#include "selgame/simulate.h"
#include "testkit/testkit.h"

using namespace selgame;
namespace tk = selgame::testkit;

namespace {

bool Near(const SimulationReport& r, int seat, double target, double k = 3.0) {
  return std::abs(r.mean[seat] - target) <= k * r.stderr_[seat];
}

ErrorCode CodeOf(const std::function<void()>& f) {
  try {
    f();
  } catch (const Error& e) {
    return e.code();
  }
  return static_cast<ErrorCode>(0);
}

// Bid rule of a stateless strategy in the form the brute-force checker
// expects.
tk::BidRule RuleOf(const Strategy& s) {
  return [s](int k, double a, double b, double c) -> double {
    if (std::holds_alternative<AlwaysBid>(s)) return 1.0;
    if (std::holds_alternative<NeverBid>(s)) return 0.0;
    if (std::holds_alternative<ProphetThreshold>(s)) return a >= c ? 1.0 : 0.0;
    if (const auto* t = std::get_if<ThresholdStrategy>(&s)) {
      if (k >= static_cast<int>(t->thresholds.size())) return 1.0;
      return a >= t->thresholds[k] ? 1.0 : 0.0;
    }
    return std::get<FullRecallSpe>(s).policy->Bids(k, a, b) ? 1.0 : 0.0;
  };
}

}  // namespace

TEST_CASE("both always bid on one arrival") {
  for (Variant v : {Variant::kNoRecall, Variant::kFullRecall}) {
    const auto r = Play(tk::Uniform(), 1, v, AlwaysBid{}, AlwaysBid{},
                        SimulationConfig{1000000, 21});
    CHECK(Near(r, 0, 0.25));
    CHECK(Near(r, 1, 0.25));
  }
}

TEST_CASE("two-point law under the recall equilibrium") {
  const auto& f = tk::Fixture("two_point_closed_forms");
  for (int n = 2; n <= 4; ++n) {
    const Strategy s = SpeStrategy(tk::TwoPoint(), n, Variant::kFullRecall, Which::kBest);
    const auto r = Play(tk::TwoPoint(), n, Variant::kFullRecall, s, s,
                        SimulationConfig{200000, 100 + static_cast<uint64_t>(n)});
    CHECK(Near(r, 0, tk::Lookup(f, "h", n).value));
    CHECK(Near(r, 1, tk::Lookup(f, "h", n).value));
  }
}

TEST_CASE("a player who never bids") {
  const int n = 4;
  const auto c = ProphetValues(tk::Uniform(), n);
  const auto r = Play(tk::Uniform(), n, Variant::kNoRecall, NeverBid{}, ProphetThreshold{},
                      SimulationConfig{200000, 5});
  CHECK(r.mean[0] == 0.0);
  CHECK(Near(r, 1, c[n]));
  const GapReport g = BestResponseGap(tk::Uniform(), n, Variant::kNoRecall, NeverBid{});
  CHECK(g.gap > 0.0);
  CHECK(g.gap == doctest::Approx(c[n]).epsilon(1e-9));
}

TEST_CASE("recall equilibrium thresholds with three uniform arrivals") {
  const auto worst = std::get<FullRecallSpe>(
      SpeStrategy(tk::Uniform(), 3, Variant::kFullRecall, Which::kWorst, GridConfig{501, 1e-10}));
  const auto best = std::get<FullRecallSpe>(
      SpeStrategy(tk::Uniform(), 3, Variant::kFullRecall, Which::kBest, GridConfig{501, 1e-10}));
  CHECK(worst.policy->Threshold(2, 0.0) == doctest::Approx(2.0 / 3.0).epsilon(1e-6));
  CHECK(best.policy->Threshold(2, 0.0) == doctest::Approx(UniformBestThreshold()).epsilon(1e-6));
  // Last stage: always bid.
  CHECK(worst.policy->Threshold(0, 0.3) == doctest::Approx(0.3));
  const auto one = std::get<FullRecallSpe>(
      SpeStrategy(tk::TwoPoint(), 1, Variant::kFullRecall, Which::kWorst));
  CHECK(one.policy->Bids(0, 1.0 / 3.0, 0.0));
}

TEST_CASE("best response gaps at equilibrium strategies") {
  for (Which w : {Which::kBest, Which::kWorst}) {
    const Strategy fr = SpeStrategy(tk::Uniform(), 3, Variant::kFullRecall, w, GridConfig{501, 1e-10});
    CHECK(BestResponseGap(tk::Uniform(), 3, Variant::kFullRecall, fr).gap <= 2e-3);
    const Strategy nr = SpeStrategy(tk::Uniform(), 3, Variant::kNoRecall, w);
    const GapReport g = BestResponseGap(tk::Uniform(), 3, Variant::kNoRecall, nr);
    CHECK(g.gap <= 2e-3);
    const auto s = SummarizeNoRecall(tk::Uniform(), 3);
    const double target = w == Which::kBest ? s.beta : s.alpha;
    CHECK(g.profile[0] + g.profile[1] == doctest::Approx(2 * target).epsilon(1e-6));
  }
  for (Variant v : {Variant::kNoRecall, Variant::kFullRecall}) {
    const Strategy s = SpeStrategy(tk::Uniform(), 1, v, Which::kBest);
    CHECK(BestResponseGap(tk::Uniform(), 1, v, s).gap == 0.0);
  }
}

TEST_CASE("always bidding against two uniform arrivals") {
  // Opponent always bids at the first arrival; the best reply compares
  // (a + 1/2)/2 with 1/2, giving 9/16 against the profile value 1/2.
  const GapReport g = BestResponseGap(tk::Uniform(), 2, Variant::kNoRecall, AlwaysBid{});
  CHECK(g.best_response[0] == doctest::Approx(9.0 / 16.0).epsilon(1e-10));
  CHECK(g.profile[0] == doctest::Approx(0.5).epsilon(1e-10));
  CHECK(g.gap == doctest::Approx(1.0 / 16.0).epsilon(1e-10));
}

TEST_CASE("best response matches brute-force tree enumeration") {
  std::mt19937_64 rng(77);
  std::vector<Distribution> laws = {tk::TwoPoint(), tk::Counterexample()};
  for (int i = 0; i < 4; ++i) laws.push_back(tk::RandomLatticeLaw(rng, 3, 20));
  for (const Distribution& d : laws) {
    for (int n = 1; n <= 4; ++n) {
      std::vector<Strategy> strategies = {AlwaysBid{}, ProphetThreshold{},
                                          ThresholdStrategy{{0.4, 0.55, 0.7}}};
      strategies.push_back(SpeStrategy(d, n, Variant::kFullRecall, Which::kWorst));
      strategies.push_back(SpeStrategy(d, n, Variant::kFullRecall, Which::kBest));
      for (const Strategy& s : strategies) {
        for (Variant v : {Variant::kNoRecall, Variant::kFullRecall}) {
          const bool recall = v == Variant::kFullRecall;
          if (!recall && std::holds_alternative<FullRecallSpe>(s)) continue;
          const auto [br, prof] = tk::BruteForceResponse(d, n, recall, RuleOf(s));
          const GapReport g = BestResponseGap(d, n, v, s);
          INFO(StrategyName(s), " n=", n, " recall=", recall);
          CHECK(g.best_response[0] == doctest::Approx(br).epsilon(1e-12));
          CHECK(g.profile[0] == doctest::Approx(prof).epsilon(1e-12));
          if (std::holds_alternative<FullRecallSpe>(s)) CHECK(g.gap <= 1e-12);
        }
      }
    }
  }
}

TEST_CASE("simulated equilibrium payoffs match the recursions") {
  const auto s = SummarizeNoRecall(tk::Uniform(), 3);
  for (Which w : {Which::kBest, Which::kWorst}) {
    const Strategy st = SpeStrategy(tk::Uniform(), 3, Variant::kNoRecall, w);
    const auto r = Play(tk::Uniform(), 3, Variant::kNoRecall, st, st, SimulationConfig{200000, 9});
    const double target = w == Which::kBest ? s.beta : s.alpha;
    // Sum of both payoffs against twice the per-player value.
    const double se = std::hypot(r.stderr_[0], r.stderr_[1]);
    CHECK(std::abs(r.mean[0] + r.mean[1] - 2 * target) <= 3 * se);
  }
  const Strategy fr = SpeStrategy(tk::Uniform(), 3, Variant::kFullRecall, Which::kWorst);
  const auto r = Play(tk::Uniform(), 3, Variant::kFullRecall, fr, fr, SimulationConfig{200000, 10});
  CHECK(Near(r, 0, 607.0 / 972.0));
  CHECK(Near(r, 1, 607.0 / 972.0));
}

TEST_CASE("determinism and tie fairness") {
  const Strategy st = ThresholdStrategy{{0.5, 0.6, 0.7}};
  const SimulationConfig cfg{50000, 42};
  const auto a = Play(tk::Uniform(), 3, Variant::kNoRecall, st, st, cfg);
  const auto b = Play(tk::Uniform(), 3, Variant::kNoRecall, st, st, cfg);
  CHECK(a.mean[0] == b.mean[0]);
  CHECK(a.mean[1] == b.mean[1]);
  const auto c = Play(tk::Uniform(), 3, Variant::kNoRecall, st, st, SimulationConfig{50000, 43});
  CHECK(c.mean[0] != a.mean[0]);
  for (Variant v : {Variant::kNoRecall, Variant::kFullRecall}) {
    const auto r = Play(tk::Uniform(), 3, v, AlwaysBid{}, AlwaysBid{}, SimulationConfig{400000, 3});
    CHECK(std::abs(r.mean[0] - r.mean[1]) <= 3 * std::hypot(r.stderr_[0], r.stderr_[1]));
  }
}

TEST_CASE("strategy errors") {
  const Strategy fr = SpeStrategy(tk::Uniform(), 2, Variant::kFullRecall, Which::kBest);
  CHECK(CodeOf([&] { SpeStrategy(tk::TwoPoint(), 2, Variant::kNoRecall, Which::kBest); }) ==
        ErrorCode::kUnsupported);
  CHECK(CodeOf([&] {
          Play(tk::Uniform(), 3, Variant::kFullRecall, fr, fr, SimulationConfig{10, 1});
        }) == ErrorCode::kArgument);
  CHECK(CodeOf([&] {
          Play(tk::Uniform(), 2, Variant::kNoRecall, fr, fr, SimulationConfig{10, 1});
        }) == ErrorCode::kUnsupported);
  const Strategy nr = SpeStrategy(tk::Uniform(), 2, Variant::kNoRecall, Which::kBest);
  GapConfig big;
  big.diagonal_points = 60000;
  CHECK(CodeOf([&] { BestResponseGap(tk::Uniform(), 2, Variant::kNoRecall, nr, big); }) ==
        ErrorCode::kResource);
  CHECK(CodeOf([&] {
          Play(tk::Uniform(), 0, Variant::kNoRecall, AlwaysBid{}, AlwaysBid{}, {});
        }) == ErrorCode::kArgument);
}
