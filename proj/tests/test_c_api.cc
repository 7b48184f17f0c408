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

// Exercises the shared library through its C interface only.

#include <cstring>
#include <string>
#include <vector>

#include "doctest.h"
#include "json.hpp"
#include "selgame/c_api.h"

namespace {

const char* kTwoPoint =
    R"({"type": "discrete", "atoms": [{"x": "1/3", "p": "1/2"}, {"x": "2/3", "p": "1/2"}]})";

sg_distribution* Load(const char* spec) {
  sg_distribution* d = nullptr;
  REQUIRE(sg_distribution_from_text(spec, &d) == SG_OK);
  return d;
}

}  // namespace

TEST_CASE("distribution handles") {
  sg_distribution* d = Load("uniform");
  double m = 0.0;
  CHECK(sg_distribution_mean(d, &m) == SG_OK);
  CHECK(m == doctest::Approx(0.5));
  char* text = nullptr;
  CHECK(sg_distribution_json(d, &text) == SG_OK);
  CHECK(std::string(text).find("uniform") != std::string::npos);
  sg_string_free(text);
  sg_distribution_free(d);

  sg_distribution* bad = nullptr;
  CHECK(sg_distribution_from_text(R"({"type": "discrete", "atoms": [{"x": 0.2}]})", &bad) ==
        SG_ERR_VALIDATION);
  CHECK(bad == nullptr);
  CHECK(std::string(sg_last_error()).find("atoms[0]") != std::string::npos);
  CHECK(sg_distribution_from_text(nullptr, &bad) == SG_ERR_ARGUMENT);
  CHECK(std::string(sg_status_name(SG_ERR_RESOURCE)) == "resource");
}

TEST_CASE("values through the C interface") {
  sg_distribution* u = Load("uniform");
  std::vector<double> c(4);
  CHECK(sg_prophet_values(u, 3, c.data()) == SG_OK);
  CHECK(c[3] == doctest::Approx(89.0 / 128.0));
  double l = 0.0, h = 0.0;
  CHECK(sg_fullrecall_band(u, 3, sg_default_grid(), &l, &h) == SG_OK);
  CHECK(l == doctest::Approx(607.0 / 972.0));
  CHECK(sg_uniform_closed_forms(2, 0.9, 0.0, &l, &h) == SG_OK);
  CHECK(l == doctest::Approx(0.9 / 2 + 1.0 / 3.0));
  std::vector<sg_norecall_row> rows(4);
  CHECK(sg_norecall_series(u, 4, 1, rows.data()) == SG_OK);
  CHECK(rows[1].alpha_prime == doctest::Approx(15.0 / 32.0));
  sg_ratio_report r{};
  CHECK(sg_ratios(u, 2, SG_NO_RECALL, sg_default_grid(), &r) == SG_OK);
  CHECK(r.pos == doctest::Approx(32.0 / 31.0));
  CHECK(sg_ratios(u, 1, SG_NO_RECALL, sg_default_grid(), &r) == SG_ERR_ARGUMENT);
  sg_distribution_free(u);

  sg_distribution* tp = Load(kTwoPoint);
  CHECK(sg_norecall_series(tp, 2, 0, rows.data()) == SG_ERR_UNSUPPORTED);
  char* js = nullptr;
  CHECK(sg_oracle_json(tp, 2, SG_NO_RECALL, &js) == SG_OK);
  const auto j = nlohmann::json::parse(js);
  sg_string_free(js);
  CHECK(j.at("payoffs").size() == 3);
  CHECK(sg_oracle_json(tp, 7, SG_NO_RECALL, &js) == SG_ERR_RESOURCE);
  sg_distribution_free(tp);
}

TEST_CASE("strategies and simulation") {
  sg_distribution* u = Load("uniform");
  sg_strategy* s = nullptr;
  CHECK(sg_strategy_spe(u, 3, SG_FULL_RECALL, SG_WORST, sg_grid{501, 1e-10}, &s) == SG_OK);
  double t = 0.0;
  CHECK(sg_strategy_threshold_at(s, 2, 0.0, &t) == SG_OK);
  CHECK(t == doctest::Approx(2.0 / 3.0).epsilon(1e-6));
  sg_sim_report rep{};
  CHECK(sg_simulate(u, 3, SG_FULL_RECALL, s, s, 20000, 7, &rep) == SG_OK);
  CHECK(rep.runs == 20000);
  sg_sim_report again{};
  CHECK(sg_simulate(u, 3, SG_FULL_RECALL, s, s, 20000, 7, &again) == SG_OK);
  CHECK(std::memcmp(rep.mean, again.mean, sizeof rep.mean) == 0);
  sg_gap_report g{};
  CHECK(sg_best_response_gap(u, 3, SG_FULL_RECALL, s, sg_grid{501, 1e-9}, 201, &g) == SG_OK);
  CHECK(g.gap <= 2e-3);
  CHECK(sg_simulate(u, 3, SG_NO_RECALL, s, s, 10, 1, &rep) == SG_ERR_UNSUPPORTED);
  sg_strategy_free(s);

  sg_strategy* never = nullptr;
  CHECK(sg_strategy_simple("never", &never) == SG_OK);
  CHECK(sg_strategy_threshold_at(never, 0, 0.0, &t) == SG_ERR_UNSUPPORTED);
  CHECK(sg_strategy_simple("sometimes", &never) == SG_ERR_VALIDATION);
  sg_strategy_free(never);
  const double th[2] = {0.5, 0.6};
  sg_strategy* ts = nullptr;
  CHECK(sg_strategy_thresholds(th, 2, &ts) == SG_OK);
  char* name = nullptr;
  CHECK(sg_strategy_name(ts, &name) == SG_OK);
  CHECK(std::string(name) == "threshold");
  sg_string_free(name);
  sg_strategy_free(ts);
  sg_distribution_free(u);
}

TEST_CASE("tightness family and two-arrival forms") {
  sg_distribution* d = nullptr;
  REQUIRE(sg_tightness_family(0.01, 0.001, &d) == SG_OK);
  double pos2 = 0.0, poa2 = 0.0;
  CHECK(sg_two_arrival(d, &pos2, &poa2) == SG_OK);
  CHECK(pos2 >= 4.0 / 3.0 - 0.02);
  sg_distribution_free(d);
  CHECK(sg_tightness_family(0.9, 0.1, &d) == SG_ERR_ARGUMENT);
}
