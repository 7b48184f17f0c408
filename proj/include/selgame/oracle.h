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

#ifndef SELGAME_ORACLE_H_
#define SELGAME_ORACLE_H_

#include <string>
#include <vector>

#include "json.hpp"
#include "selgame/distribution.h"
#include "selgame/rational.h"
#include "selgame/stage_games.h"

namespace selgame {

struct RationalAtom {
  Rational x;
  Rational p;
};

// Exact atoms of a purely discrete law. Uses the exact spelling when the
// atom carries one, otherwise the shortest decimal of the double. Masses
// must sum to exactly 1.
std::vector<RationalAtom> RationalLaw(const Distribution& d);

struct PayoffPair {
  Rational x;
  Rational y;
  // Stage case tag at the root, then the tags one level down.
  std::string trace;
};

struct OracleLimits {
  int max_support = 4;
  int max_n = 6;
  size_t max_set = 1000000;
};

struct DiscreteSpepSet {
  Variant variant = Variant::kNoRecall;
  int n = 0;
  // Sorted by (x, y), no duplicates.
  std::vector<PayoffPair> payoffs;
  // Set when some stage game had a continuum of equilibria; only its
  // endpoint payoffs were propagated.
  bool endpoints_only = false;
};

// Equilibrium payoff set from the start of the game with n arrivals.
DiscreteSpepSet OracleSpep(const Distribution& d, int n, Variant variant,
                           const OracleLimits& limits = {});

struct OracleSummary {
  Rational best_sum;
  Rational worst_sum;
  Rational worst_single;
  Rational best_single;
};

OracleSummary SummarizeOracle(const DiscreteSpepSet& set);

// {"num": "...", "den": "...", "value": double}.
nlohmann::json RationalJson(const Rational& r);
nlohmann::json OracleJson(const DiscreteSpepSet& set);

}  // namespace selgame

#endif  // SELGAME_ORACLE_H_
