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

#include <random>
#include <set>
#include <string>

#include "doctest.h"
#include "selgame/errors.h"
#include "selgame/full_recall.h"
#include "selgame/no_recall.h"
#include "selgame/oracle.h"
#include "selgame/prophet.h"
#include "testkit/testkit.h"

using namespace selgame;
namespace tk = selgame::testkit;

namespace {

std::set<std::pair<std::string, std::string>> AsStrings(const DiscreteSpepSet& s) {
  std::set<std::pair<std::string, std::string>> out;
  for (const auto& p : s.payoffs) {
    out.insert({RationalToString(p.x), RationalToString(p.y)});
  }
  return out;
}

ErrorCode CodeOf(const Distribution& d, int n, Variant v) {
  try {
    OracleSpep(d, n, v);
  } catch (const Error& e) {
    return e.code();
  }
  return static_cast<ErrorCode>(0);
}

}  // namespace

TEST_CASE("two-point law, two arrivals, no recall") {
  const auto set = OracleSpep(tk::TwoPoint(), 2, Variant::kNoRecall);
  const std::set<std::pair<std::string, std::string>> want = {
      {"11/24", "13/24"}, {"13/24", "11/24"}, {"23/48", "23/48"}};
  CHECK(AsStrings(set) == want);
  const OracleSummary s = SummarizeOracle(set);
  CHECK(RationalToString(s.best_single) == "13/24");
  CHECK(RationalToString(s.worst_single) == "11/24");
  CHECK(RationalToString(s.best_sum) == "1");
  CHECK(RationalToString(s.worst_sum) == "23/24");
}

TEST_CASE("two-point law, closed forms up to six arrivals") {
  const auto& f = tk::Fixture("two_point_closed_forms");
  for (int n = 2; n <= 6; ++n) {
    const auto nr = OracleSpep(tk::TwoPoint(), n, Variant::kNoRecall);
    const std::string p = tk::Lookup(f, "p", n).exact, q = tk::Lookup(f, "q", n).exact,
                      r = tk::Lookup(f, "r", n).exact;
    CHECK(AsStrings(nr) == std::set<std::pair<std::string, std::string>>{{p, q}, {q, p}, {r, r}});
    const auto fr = OracleSpep(tk::TwoPoint(), n, Variant::kFullRecall);
    const std::string h = tk::Lookup(f, "h", n).exact;
    CHECK(AsStrings(fr) == std::set<std::pair<std::string, std::string>>{{h, h}});
  }
}

TEST_CASE("recall can be worth more than the best no-recall payoff") {
  const auto& f = tk::Fixture("recall_counterexample");
  const auto fr = OracleSpep(tk::Counterexample(), 2, Variant::kFullRecall);
  const auto nr = OracleSpep(tk::Counterexample(), 2, Variant::kNoRecall);
  const OracleSummary sf = SummarizeOracle(fr), sn = SummarizeOracle(nr);
  CHECK(RationalToString(sf.best_single) == tk::Lookup(f, "h", 2).exact);
  CHECK(RationalToString(sn.best_single) == tk::Lookup(f, "beta_prime", 2).exact);
  CHECK(sf.best_single > sn.best_single);
}

TEST_CASE("summary of a singleton") {
  DiscreteSpepSet s;
  s.payoffs.push_back(PayoffPair{Rational(2, 7), Rational(2, 7), ""});
  const OracleSummary o = SummarizeOracle(s);
  CHECK(o.best_sum == Rational(4, 7));
  CHECK(o.worst_sum == Rational(4, 7));
  CHECK(o.best_single == Rational(2, 7));
  CHECK(o.worst_single == Rational(2, 7));
}

TEST_CASE("json encoding") {
  const auto j = OracleJson(OracleSpep(tk::TwoPoint(), 2, Variant::kNoRecall));
  CHECK(j.at("variant") == "norecall");
  CHECK(j.at("payoffs").size() == 3);
  CHECK(j.at("payoffs")[0].at("x").at("num") == "11");
  CHECK(j.at("payoffs")[0].at("x").at("den") == "24");
  CHECK(j.at("summary").at("best_single").at("value").get<double>() ==
        doctest::Approx(13.0 / 24.0));
}

TEST_CASE("guards") {
  CHECK(CodeOf(tk::Uniform(), 2, Variant::kNoRecall) == ErrorCode::kUnsupported);
  CHECK(CodeOf(tk::TwoPoint(), 7, Variant::kNoRecall) == ErrorCode::kResource);
  std::mt19937_64 rng(1);
  CHECK(CodeOf(tk::RandomLatticeLaw(rng, 5), 2, Variant::kFullRecall) == ErrorCode::kResource);
  OracleLimits tight;
  tight.max_set = 2;
  CHECK_THROWS_AS(OracleSpep(tk::TwoPoint(), 3, Variant::kNoRecall, tight), Error);
  CHECK(CodeOf(tk::TwoPoint(), 0, Variant::kNoRecall) == ErrorCode::kArgument);
}

TEST_CASE("property: structure of equilibrium payoff sets") {
  std::mt19937_64 rng(123);
  for (int trial = 0; trial < 12; ++trial) {
    const Distribution d = tk::RandomLatticeLaw(rng, 2 + trial % 2, 12);
    const auto c = ProphetValues(d, 4);
    const auto s = MaxFeasibleSum(d, 4);
    for (int n = 1; n <= 4; ++n) {
      const auto fr = OracleSpep(d, n, Variant::kFullRecall);
      for (const auto& p : fr.payoffs) CHECK(p.x == p.y);
      const FullRecallBand band = Band(d, n);
      const OracleSummary sf = SummarizeOracle(fr);
      CHECK(RationalToDouble(sf.worst_single) == doctest::Approx(band.l).epsilon(1e-12));
      CHECK(RationalToDouble(sf.best_single) == doctest::Approx(band.h).epsilon(1e-12));

      const auto nr = OracleSpep(d, n, Variant::kNoRecall);
      const auto pairs = AsStrings(nr);
      for (const auto& [x, y] : pairs) CHECK(pairs.count({y, x}) == 1);
      for (const auto& p : nr.payoffs) {
        CHECK(RationalToDouble(p.x) <= c[n] + 1e-12);
        CHECK(RationalToDouble(p.x + p.y) <= s[n] + 1e-12);
      }
      if (n == 2) {
        CHECK(RationalToDouble(SummarizeOracle(nr).best_single) ==
              doctest::Approx(BestSingleTwoArrivals(d)).epsilon(1e-12));
      }
    }
  }
}
