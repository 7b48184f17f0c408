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

#ifndef SELGAME_STAGE_GAMES_H_
#define SELGAME_STAGE_GAMES_H_

#include <algorithm>
#include <cmath>
#include <string>
#include <utility>
#include <vector>

#include "selgame/errors.h"
#include "selgame/rational.h"

namespace selgame {

enum class Variant { kFullRecall, kNoRecall };

inline constexpr double kStageTol = 1e-12;

// Three-way comparison; doubles within kStageTol compare equal.
inline int Compare(double x, double y) {
  if (std::abs(x - y) <= kStageTol) return 0;
  return x < y ? -1 : 1;
}
inline int Compare(const Rational& x, const Rational& y) {
  return x == y ? 0 : (x < y ? -1 : 1);
}

// A Nash equilibrium of a 2x2 bid/pass stage game. Bid probabilities refer
// to the best available value (the current arrival without recall).
template <typename T>
struct StageEquilibrium {
  T payoff1;
  T payoff2;
  T bid1;
  T bid2;
};

template <typename T>
struct StageOutcome {
  // 'a'..'e' for the full-recall game, 'a'..'k' without recall.
  char tag = '?';
  // True when the listed payoffs are endpoints of a continuum.
  bool continuum = false;
  std::vector<StageEquilibrium<T>> equilibria;
  T min_sum{};
  T max_sum{};
  T min_single{};
  T max_single{};
};

namespace internal {

template <typename T>
void FillExtremes(StageOutcome<T>& out) {
  bool first = true;
  for (const auto& eq : out.equilibria) {
    const T sum = eq.payoff1 + eq.payoff2;
    const T lo = eq.payoff1 < eq.payoff2 ? eq.payoff1 : eq.payoff2;
    const T hi = eq.payoff1 < eq.payoff2 ? eq.payoff2 : eq.payoff1;
    if (first || sum < out.min_sum) out.min_sum = sum;
    if (first || sum > out.max_sum) out.max_sum = sum;
    if (first || lo < out.min_single) out.min_single = lo;
    if (first || hi > out.max_single) out.max_single = hi;
    first = false;
  }
}

template <typename T>
StageEquilibrium<T> Eq(T p1, T p2, T b1, T b2) {
  return StageEquilibrium<T>{std::move(p1), std::move(p2), std::move(b1),
                             std::move(b2)};
}

}  // namespace internal

// Symmetric full-recall stage game after dominance reduction: both bid gives
// ((a+c)/2, (a+c)/2), a lone bidder gets a and the other c, both passing
// gives (d, d).
template <typename T>
StageOutcome<T> SolveFullRecallStage(const T& a, const T& c, const T& d) {
  using internal::Eq;
  const int ac = Compare(a, c), ad = Compare(a, d);
  if (ac <= 0 && ad > 0) {
    Fail(ErrorCode::kInconsistent,
         "full-recall stage: continuation below a while a lone rival gets at least a");
  }
  StageOutcome<T> out;
  const T half = (a + c) / 2;
  const T one(1), zero(0);
  if (ac > 0 && ad > 0) {
    out.tag = 'a';
    out.equilibria.push_back(Eq<T>(half, half, one, one));
  } else if (ac > 0 && ad < 0) {
    out.tag = 'b';
    const T denom = 2 * d - a - c;
    const T mixed = (d * c - 2 * a * c + a * d) / denom;
    const T prob = 2 * (d - a) / denom;
    out.equilibria.push_back(Eq<T>(half, half, one, one));
    out.equilibria.push_back(Eq<T>(d, d, zero, zero));
    out.equilibria.push_back(Eq<T>(mixed, mixed, prob, prob));
  } else if (ac < 0) {
    out.tag = 'c';
    out.equilibria.push_back(Eq<T>(d, d, zero, zero));
  } else if ((ad == 0 && ac > 0) || (ac == 0 && ad < 0)) {
    out.tag = 'd';
    out.equilibria.push_back(Eq<T>(half, half, one, one));
    out.equilibria.push_back(Eq<T>(d, d, zero, zero));
  } else {
    out.tag = 'e';
    out.equilibria.push_back(Eq<T>(d, d, one, one));
  }
  internal::FillExtremes(out);
  return out;
}

// No-recall stage game on the current arrival a: both bid gives
// ((a+c)/2, (a+c)/2), a lone bidder gets a and the other c, both passing
// gives (d, e). Requires d, e <= c.
template <typename T>
StageOutcome<T> SolveNoRecallStage(const T& a, const T& c, const T& d,
                                   const T& e) {
  using internal::Eq;
  if (Compare(d, c) > 0 || Compare(e, c) > 0) {
    Fail(ErrorCode::kInconsistent,
         "no-recall stage: continuation exceeds the lone-player value");
  }
  StageOutcome<T> out;
  const T one(1), zero(0);
  const int ac = Compare(a, c);
  // Bid probability of the opponent that leaves a player with continuation
  // v indifferent, and the resulting payoff.
  auto indiff = [&](const T& v) { return 2 * (a - v) / (a + c - 2 * v); };
  auto gamma = [&](const T& v) {
    return (2 * a * c - v * (c + a)) / (c + a - 2 * v);
  };
  if (ac > 0) {
    out.tag = 'a';
    const T half = (a + c) / 2;
    out.equilibria.push_back(Eq<T>(half, half, one, one));
  } else if (ac == 0) {
    out.tag = 'b';
    out.equilibria.push_back(Eq<T>(c, c, one, one));
  } else {
    const int sd = Compare(a, d), se = Compare(a, e);
    if (sd > 0 && se > 0) {
      out.tag = 'c';
      out.equilibria.push_back(Eq<T>(a, c, one, zero));
      out.equilibria.push_back(Eq<T>(c, a, zero, one));
      out.equilibria.push_back(Eq<T>(gamma(d), gamma(e), indiff(e), indiff(d)));
    } else if (sd == 0 && se > 0) {
      out.tag = 'd';
      out.continuum = true;
      out.equilibria.push_back(Eq<T>(c, a, zero, one));
      out.equilibria.push_back(Eq<T>(a, gamma(e), indiff(e), zero));
      out.equilibria.push_back(Eq<T>(a, c, one, zero));
    } else if (sd > 0 && se == 0) {
      out.tag = 'e';
      out.continuum = true;
      out.equilibria.push_back(Eq<T>(a, c, one, zero));
      out.equilibria.push_back(Eq<T>(gamma(d), a, zero, indiff(d)));
      out.equilibria.push_back(Eq<T>(c, a, zero, one));
    } else if (sd == 0 && se == 0) {
      out.tag = 'f';
      out.continuum = true;
      out.equilibria.push_back(Eq<T>(a, a, zero, zero));
      out.equilibria.push_back(Eq<T>(a, c, one, zero));
      out.equilibria.push_back(Eq<T>(c, a, zero, one));
    } else if (sd < 0 && se < 0) {
      out.tag = 'g';
      out.equilibria.push_back(Eq<T>(d, e, zero, zero));
    } else if (sd < 0 && se > 0) {
      out.tag = 'h';
      out.equilibria.push_back(Eq<T>(c, a, zero, one));
    } else if (sd > 0 && se < 0) {
      out.tag = 'i';
      out.equilibria.push_back(Eq<T>(a, c, one, zero));
    } else if (sd < 0 && se == 0) {
      out.tag = 'j';
      out.continuum = true;
      out.equilibria.push_back(Eq<T>(d, e, zero, zero));
      out.equilibria.push_back(Eq<T>(c, a, zero, one));
    } else {
      out.tag = 'k';
      out.continuum = true;
      out.equilibria.push_back(Eq<T>(d, e, zero, zero));
      out.equilibria.push_back(Eq<T>(a, c, one, zero));
    }
  }
  internal::FillExtremes(out);
  return out;
}

// Largest gain either player obtains by switching to a pure action, and the
// payoffs the profile actually yields. Full recall passes e = d.
template <typename T>
struct ProfileCheck {
  T payoff1;
  T payoff2;
  T gain;
};

template <typename T>
ProfileCheck<T> CheckStageProfile(const T& a, const T& c, const T& d,
                                  const T& e, const T& bid1, const T& bid2) {
  const T half = (a + c) / 2;
  const T one(1);
  const T bid_1 = bid2 * half + (one - bid2) * a;
  const T pass_1 = bid2 * c + (one - bid2) * d;
  const T bid_2 = bid1 * half + (one - bid1) * a;
  const T pass_2 = bid1 * c + (one - bid1) * e;
  ProfileCheck<T> out;
  out.payoff1 = bid1 * bid_1 + (one - bid1) * pass_1;
  out.payoff2 = bid2 * bid_2 + (one - bid2) * pass_2;
  const T g1 = (bid_1 > pass_1 ? bid_1 : pass_1) - out.payoff1;
  const T g2 = (bid_2 > pass_2 ? bid_2 : pass_2) - out.payoff2;
  out.gain = g1 > g2 ? g1 : g2;
  return out;
}

// L and H select the worst and best symmetric equilibrium payoff.
inline double SelectorL(double x, double y, double z) {
  return x <= y + kStageTol ? z : 0.5 * (x + y);
}
inline double SelectorH(double x, double y, double z) {
  return x <= std::max(y, z) + kStageTol ? z : 0.5 * (x + y);
}

// Worst and best payoff of the full-recall stage game on its consistency
// domain.
std::pair<double, double> PsiExtremes(double a, double c, double d);

extern template StageOutcome<double> SolveFullRecallStage(const double&,
                                                          const double&,
                                                          const double&);
extern template StageOutcome<Rational> SolveFullRecallStage(const Rational&,
                                                            const Rational&,
                                                            const Rational&);
extern template StageOutcome<double> SolveNoRecallStage(const double&,
                                                        const double&,
                                                        const double&,
                                                        const double&);
extern template StageOutcome<Rational> SolveNoRecallStage(const Rational&,
                                                          const Rational&,
                                                          const Rational&,
                                                          const Rational&);

}  // namespace selgame

#endif  // SELGAME_STAGE_GAMES_H_
