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

#ifndef SELGAME_PROPHET_H_
#define SELGAME_PROPHET_H_

#include <vector>

#include "selgame/distribution.h"

namespace selgame {

// c[k] for k = 1..n (index 0 holds c_0 = 0): value of the k-arrival
// single-agent take-it-or-leave-it problem.
std::vector<double> ProphetValues(const Distribution& d, int n);

// s[k] for k = 1..n (index 0 holds 0): best expected sum of two picks among
// k take-it-or-leave-it arrivals.
std::vector<double> MaxFeasibleSum(const Distribution& d, int n);

}  // namespace selgame

#endif  // SELGAME_PROPHET_H_
