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

#include "selgame/prophet.h"

#include <algorithm>

#include "selgame/errors.h"

namespace selgame {

std::vector<double> ProphetValues(const Distribution& d, int n) {
  if (n < 1) Fail(ErrorCode::kArgument, "prophet values: n must be >= 1");
  std::vector<double> c(n + 1, 0.0);
  c[1] = d.mean();
  for (int k = 2; k <= n; ++k) c[k] = d.expect_max_with(c[k - 1]);
  return c;
}

std::vector<double> MaxFeasibleSum(const Distribution& d, int n) {
  if (n < 1) Fail(ErrorCode::kArgument, "max feasible sum: n must be >= 1");
  const std::vector<double> c = ProphetValues(d, n);
  std::vector<double> s(n + 1, 0.0);
  s[1] = d.mean();
  if (n >= 2) s[2] = 2.0 * d.mean();
  for (int k = 3; k <= n; ++k) {
    // Take the arrival iff x + c[k-1] beats waiting with two picks left.
    const double t = std::clamp(s[k - 1] - c[k - 1], 0.0, 1.0);
    s[k] = d.partial_expectation(t, 1.0, [&](double x) { return x + c[k - 1]; }) +
           s[k - 1] * d.cdf(t);
  }
  return s;
}

}  // namespace selgame
