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

#include "selgame/stage_games.h"

namespace selgame {

template StageOutcome<double> SolveFullRecallStage(const double&,
                                                   const double&,
                                                   const double&);
template StageOutcome<Rational> SolveFullRecallStage(const Rational&,
                                                     const Rational&,
                                                     const Rational&);
template StageOutcome<double> SolveNoRecallStage(const double&, const double&,
                                                 const double&, const double&);
template StageOutcome<Rational> SolveNoRecallStage(const Rational&,
                                                   const Rational&,
                                                   const Rational&,
                                                   const Rational&);

std::pair<double, double> PsiExtremes(double a, double c, double d) {
  const int ac = Compare(a, c), ad = Compare(a, d);
  if ((ac < 0 && ad >= 0) || (ac == 0 && ad > 0)) {
    Fail(ErrorCode::kArgument, "psi: (a, c, d) outside the consistency domain");
  }
  const double half = 0.5 * (a + c);
  if (ac < 0 || (ac == 0 && ad == 0)) return {d, d};
  if (ad > 0) return {half, half};
  return {half, d};
}

}  // namespace selgame
