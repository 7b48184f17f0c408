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
#include "selgame/efficiency.h"
#include "selgame/errors.h"
#include "selgame/full_recall.h"
#include "selgame/no_recall.h"
#include "testkit/testkit.h"

using namespace selgame;
namespace tk = selgame::testkit;

TEST_CASE("uniform, two arrivals, no recall") {
  const auto& f = tk::Fixture("uniform_ratio_table");
  const RatioReport r = Ratios(tk::Uniform(), 2, Variant::kNoRecall);
  CHECK(std::abs(r.poa - tk::Lookup(f, "poa_nr", 2).value) <= 1e-3);
  CHECK(std::abs(r.pos - tk::Lookup(f, "pos_nr", 2).value) <= 1e-3);
  CHECK(std::abs(r.pr - tk::Lookup(f, "pr_nr", 2).value) <= 1e-3);
}

TEST_CASE("uniform, three arrivals, full recall") {
  const RatioReport r = Ratios(tk::Uniform(), 3, Variant::kFullRecall);
  // Top two of three uniforms is 5/4 and the worst payoff is 607/972.
  CHECK(r.poa == doctest::Approx(1.25 / (2.0 * 607.0 / 972.0)).epsilon(1e-12));
  CHECK(std::abs(r.poa - 1.000823) <= 1e-3);
  CHECK(r.pos == doctest::Approx(r.pr));
}

TEST_CASE("two arrivals with recall are always efficient") {
  for (const Distribution& d :
       {tk::Uniform(), tk::TwoPoint(), tk::BetaLaw(2, 5), tk::StepLaw({3, 1, 2})}) {
    const RatioReport r = Ratios(d, 2, Variant::kFullRecall, GridConfig{201, 1e-9});
    CHECK(r.poa == doctest::Approx(1.0).epsilon(1e-9));
    CHECK(r.pos == doctest::Approx(1.0).epsilon(1e-9));
    CHECK(r.pr == doctest::Approx(1.0).epsilon(1e-9));
  }
}

TEST_CASE("two-arrival closed forms") {
  const TwoArrivalForms u = TwoArrivalClosedForms(tk::Uniform());
  // 2E(X) = 1 over 2 beta_2 = 1/2 + int_{1/4}^1 x dx = 1/2 + 15/32.
  CHECK(u.pos2 == doctest::Approx(32.0 / 31.0).epsilon(1e-12));
  const auto s2 = SummarizeNoRecall(tk::Uniform(), 2);
  CHECK(u.two_alpha == doctest::Approx(2 * s2.alpha).epsilon(1e-10));
  CHECK(std::abs(u.poa2 - 1.0507) <= 1e-4);
  const TwoArrivalForms pm = TwoArrivalClosedForms(Distribution::PointMass(0.4));
  CHECK(pm.pos2 == doctest::Approx(1.0));
  CHECK(pm.poa2 == doctest::Approx(1.0));
  CHECK_THROWS_AS(TwoArrivalClosedForms(Distribution::PointMass(0.0)), Error);
}

TEST_CASE("tightness family") {
  const Distribution d = TightnessFamily(0.1, 0.01);
  REQUIRE(d.atoms().size() == 2);
  CHECK(d.atoms()[0].x == doctest::Approx(0.09));
  CHECK(d.atoms()[0].p == doctest::Approx(0.891));
  CHECK(d.atoms()[1].x == doctest::Approx(1.0));
  CHECK(d.atoms()[1].p == doctest::Approx(0.099));
  CHECK(d.density(0.5) == doctest::Approx(0.01));
  // As eta -> 0, 1/PoS_2 -> 1/2 + 1/(2(1 + (1 - eps)^2)).
  for (double eps : {0.3, 0.1, 0.03}) {
    const double limit = 1.0 / (0.5 + 1.0 / (2.0 * (1.0 + (1 - eps) * (1 - eps))));
    CHECK(TwoArrivalClosedForms(TightnessFamily(eps, 1e-7)).pos2 ==
          doctest::Approx(limit).epsilon(1e-5));
  }
  const TwoArrivalForms t = TwoArrivalClosedForms(TightnessFamily(0.01, 0.001));
  CHECK(t.pos2 >= 4.0 / 3.0 - 0.02);
  CHECK(t.pos2 <= 4.0 / 3.0 + 1e-9);
  CHECK_THROWS_AS(TightnessFamily(0.7, 0.1), Error);
  CHECK_THROWS_AS(TightnessFamily(0.1, 0.0), Error);
}

TEST_CASE("argument and degenerate errors") {
  CHECK_THROWS_AS(Ratios(tk::Uniform(), 1, Variant::kNoRecall), Error);
  try {
    Ratios(Distribution::PointMass(0.0), 2, Variant::kFullRecall);
    FAIL("expected an error");
  } catch (const Error& e) {
    CHECK(e.code() == ErrorCode::kDegenerate);
  }
}

TEST_CASE("property: ratio ordering and the two-arrival bound") {
  std::mt19937_64 rng(55);
  for (int trial = 0; trial < 20; ++trial) {
    const Distribution d = tk::RandomStepLaw(rng);
    const auto series = NoRecallRatioSeries(d, 6);
    for (const RatioReport& r : series) {
      CHECK(r.pos >= 1.0 - 1e-12);
      CHECK(r.poa >= r.pos - 1e-12);
      CHECK(r.pr >= r.pos - 1e-12);
      const RatioReport direct = Ratios(d, r.n, Variant::kNoRecall);
      CHECK(direct.poa == doctest::Approx(r.poa));
    }
    const TwoArrivalForms t = TwoArrivalClosedForms(d);
    CHECK(t.pos2 <= 4.0 / 3.0 + 1e-9);
    CHECK(t.poa2 <= 4.0 / 3.0 + 1e-9);
    CHECK(t.poa2 >= t.pos2 - 1e-12);
    CHECK(t.pos2 == doctest::Approx(series[0].pos).epsilon(1e-9));
  }
}
