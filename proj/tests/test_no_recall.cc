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
#include "selgame/no_recall.h"
#include "selgame/prophet.h"
#include "testkit/testkit.h"

using namespace selgame;
namespace tk = selgame::testkit;

TEST_CASE("uniform summaries match the published table") {
  const auto& f = tk::Fixture("uniform_no_recall_table");
  const auto series = NoRecallSeries(tk::Uniform(), 4);
  for (int n = 1; n <= 4; ++n) {
    const auto& s = series[n - 1];
    CHECK(s.n == n);
    for (const auto& [key, value] :
         {std::pair{"alpha_prime", s.alpha_prime}, {"alpha", s.alpha}, {"beta", s.beta}}) {
      const auto& e = tk::Lookup(f, key, n);
      INFO(e.citation, " ", key);
      CHECK(std::abs(value - e.value) <= e.tol);
    }
  }
}

TEST_CASE("two and three uniform arrivals") {
  const auto s2 = SummarizeNoRecall(tk::Uniform(), 2);
  CHECK(s2.alpha_prime == doctest::Approx(15.0 / 32.0).epsilon(1e-12));
  CHECK(s2.beta == doctest::Approx(31.0 / 64.0).epsilon(1e-12));
  // Worst sum with two arrivals, written out for E(X) = m = 1/2:
  // 2E(X) - int_0^{m/2} a da - int_{m/2}^{m} (a - 2m + m^2/a) da.
  const double m = 0.5;
  const double first = 0.5 * (m / 2) * (m / 2);
  auto anti = [&](double a) { return a * a / 2 - 2 * m * a + m * m * std::log(a); };
  const double two_alpha = 2 * m - first - (anti(m) - anti(m / 2));
  CHECK(2 * s2.alpha == doctest::Approx(two_alpha).epsilon(1e-10));
  CHECK(std::abs(2 * s2.alpha - 0.9517) < 1e-4);

  const auto s3 = UniformNoRecallSeries(3)[2];
  CHECK(std::abs(s3.alpha_prime - 0.5747) <= 5e-5);
  CHECK(std::abs(s3.alpha - 0.5803) <= 5e-5);
  CHECK(std::abs(s3.beta - 0.5881) <= 5e-5);
}

TEST_CASE("closed recursions agree with quadrature") {
  const auto q = NoRecallSeries(tk::Uniform(), 10);
  const auto c = UniformNoRecallSeries(10);
  for (int n = 1; n <= 10; ++n) {
    CHECK(std::abs(q[n - 1].alpha_prime - c[n - 1].alpha_prime) <= 1e-8);
    CHECK(std::abs(q[n - 1].alpha - c[n - 1].alpha) <= 1e-8);
    CHECK(std::abs(q[n - 1].beta - c[n - 1].beta) <= 1e-8);
    CHECK(q[n - 1].c() == doctest::Approx(c[n - 1].c()));
  }
}

TEST_CASE("per-value selectors") {
  const auto s = SummarizeNoRecall(tk::Uniform(), 3);
  const double c = s.c();
  const ValueSelectors lo = PerValueSelectors(s, 0.5 * s.alpha_prime);
  CHECK(lo.alpha_prime == doctest::Approx(s.alpha_prime));
  CHECK(lo.two_beta == doctest::Approx(2 * s.beta));
  CHECK(lo.two_alpha == doctest::Approx(2 * s.alpha));
  const double a = 0.5 * (c + 1.0);
  const ValueSelectors hi = PerValueSelectors(s, a);
  CHECK(hi.alpha_prime == doctest::Approx(0.5 * (a + c)));
  CHECK(hi.two_beta == doctest::Approx(a + c));
  CHECK(hi.two_alpha == doctest::Approx(a + c));
  const double mid = 0.5 * (s.beta + c);
  const ValueSelectors mx = PerValueSelectors(s, mid);
  CHECK(mx.two_alpha ==
        doctest::Approx(2 * (2 * mid * c - s.beta * (mid + c)) / (c + mid - 2 * s.beta)));
  CHECK(MixedPayoff(mid, c, s.beta) ==
        doctest::Approx((2 * mid * c - s.beta * (mid + c)) / (c + mid - 2 * s.beta)));
}

TEST_CASE("best single payoff with two arrivals") {
  CHECK(BestSingleTwoArrivals(tk::Uniform()) == doctest::Approx(0.5).epsilon(1e-9));
  CHECK(BestSingleTwoArrivals(tk::Counterexample()) == doctest::Approx(11.0 / 40.0));
}

TEST_CASE("laws with atoms are rejected by the continuous recursion") {
  try {
    NoRecallSeries(tk::TwoPoint(), 3);
    FAIL("expected an error");
  } catch (const Error& e) {
    CHECK(e.code() == ErrorCode::kUnsupported);
  }
  CHECK_THROWS_AS(UniformNoRecallSeries(0), Error);
}

TEST_CASE("property: ordering of the summaries") {
  std::mt19937_64 rng(8);
  std::vector<Distribution> laws = {tk::Uniform(), tk::BetaLaw(2, 2), tk::BetaLaw(1, 3),
                                    tk::BetaLaw(4, 2)};
  for (int i = 0; i < 8; ++i) laws.push_back(tk::RandomStepLaw(rng));
  for (const Distribution& d : laws) {
    const auto series = NoRecallSeries(d, 8);
    const auto c = ProphetValues(d, 8);
    for (const auto& s : series) {
      CHECK(s.alpha_prime <= s.alpha + 1e-12);
      CHECK(s.alpha <= s.beta + 1e-12);
      CHECK(s.beta <= c[s.n] + 1e-12);
      CHECK(s.alpha_prime >= 0.0);
      CHECK(s.beta <= 1.0);
    }
  }
}
