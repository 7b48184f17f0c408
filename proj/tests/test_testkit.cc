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
#include "selgame/rational.h"
#include "testkit/testkit.h"

using namespace selgame;
namespace tk = selgame::testkit;

namespace {

double TopTwoUniform(int n) { return (2.0 * n - 1.0) / (n + 1.0); }

}  // namespace

TEST_CASE("every fixture value carries a citation and a tolerance") {
  for (const auto& f : tk::Fixtures()) {
    CHECK(!f.dist.empty());
    for (const auto& e : f.values) {
      INFO(f.name, " ", e.key, " n=", e.n);
      CHECK(!e.citation.empty());
      CHECK(e.tol >= 0.0);
      if (!e.exact.empty()) {
        CHECK(e.tol == 0.0);
        CHECK(RationalToDouble(ParseRational(e.exact)) == e.value);
      }
    }
  }
  CHECK(tk::Fixture("uniform_no_recall_table").values.size() == 12);
  CHECK(tk::Fixture("uniform_band_table").values.size() == 20);
  CHECK(tk::Fixture("uniform_ratio_table").values.size() == 24);
}

TEST_CASE("printed-precision tolerances") {
  CHECK(tk::PrintedTolerance("1") == 1e-2);
  CHECK(tk::PrintedTolerance("1.0008") == 1e-3);
  CHECK(tk::PrintedTolerance("1.000823") == 1e-3);
  CHECK(tk::PrintedTolerance("1.0021") == 1e-3);
  CHECK(tk::PrintedTolerance("0.699") == 1e-2);
}

TEST_CASE("ratio table is consistent with the value tables") {
  const auto& nr = tk::Fixture("uniform_no_recall_table");
  const auto& band = tk::Fixture("uniform_band_table");
  const auto& ratio = tk::Fixture("uniform_ratio_table");
  // With two arrivals the best feasible sum is 2E(X) = 1.
  CHECK(std::abs(tk::Lookup(ratio, "poa_nr", 2).value -
                 1.0 / (2.0 * tk::Lookup(nr, "alpha", 2).value)) <= 1e-3);
  CHECK(std::abs(tk::Lookup(ratio, "pos_nr", 2).value -
                 1.0 / (2.0 * tk::Lookup(nr, "beta", 2).value)) <= 1e-3);
  for (int n = 2; n <= 5; ++n) {
    INFO("n=", n);
    const double t = TopTwoUniform(n);
    CHECK(std::abs(tk::Lookup(ratio, "pr_nr", n).value -
                   t / (2.0 * tk::Lookup(band, "beta", n).value)) <= 1e-3);
    CHECK(std::abs(tk::Lookup(ratio, "pr_fr", n).value -
                   t / (2.0 * tk::Lookup(band, "h", n).value)) <= 1e-3);
    CHECK(std::abs(tk::Lookup(ratio, "poa_fr", n).value -
                   t / (2.0 * tk::Lookup(band, "l", n).value)) <= 1e-3);
    CHECK(tk::Lookup(ratio, "pos_fr", n).value == tk::Lookup(ratio, "pr_fr", n).value);
  }
  for (int n = 1; n <= 4; ++n) {
    CHECK(tk::Lookup(nr, "alpha", n).value == tk::Lookup(band, "alpha", n).value);
    CHECK(tk::Lookup(nr, "beta", n).value == tk::Lookup(band, "beta", n).value);
  }
}

TEST_CASE("two-point closed forms") {
  const auto& f = tk::Fixture("two_point_closed_forms");
  CHECK(tk::Lookup(f, "h", 3).exact == RationalToString(Rational(2, 3) - Rational(5, 48)));
  CHECK(tk::Lookup(f, "p", 2).exact == "13/24");
  CHECK(tk::Lookup(f, "q", 2).exact == "11/24");
  CHECK(tk::Lookup(f, "r", 2).exact == "23/48");
}

TEST_CASE("generators and the brute-force checker") {
  std::mt19937_64 rng(1);
  for (int i = 0; i < 20; ++i) {
    const Distribution d = tk::RandomLatticeLaw(rng, 1 + i % 4);
    CHECK(d.atoms().size() == static_cast<size_t>(1 + i % 4));
    for (const Atom& a : d.atoms()) {
      CHECK(RationalToDouble(ParseRational(a.exact_x)) == doctest::Approx(a.x));
    }
    // One arrival: both bid, each expects half the mean.
    const auto [br, prof] =
        tk::BruteForceResponse(d, 1, false, [](int, double, double, double) { return 1.0; });
    CHECK(prof == doctest::Approx(0.5 * d.mean()));
    CHECK(br == doctest::Approx(0.5 * d.mean()));
  }
  CHECK(tk::BetaLaw(2, 2).density(0.5) == doctest::Approx(1.5));
  CHECK(tk::StepLaw({1, 3}).density(0.75) == doctest::Approx(1.5));
}
