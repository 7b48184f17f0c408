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

#ifndef SELGAME_QUADRATURE_H_
#define SELGAME_QUADRATURE_H_

#include <cmath>
#include <string>
#include <vector>

#include "selgame/errors.h"

namespace selgame {

inline constexpr double kQuadTol = 1e-10;
inline constexpr int kQuadMaxDepth = 40;

// Nodes and weights of the m-point Gauss-Legendre rule on [-1, 1].
struct GaussRule {
  std::vector<double> nodes;
  std::vector<double> weights;
};
const GaussRule& GaussLegendre(int m);

// Integrates f over [a, b] with the m-point rule. Exact for polynomials of
// degree 2m - 1.
template <typename F>
double GaussIntegrate(F&& f, double a, double b, int m) {
  if (b <= a) return 0.0;
  const GaussRule& rule = GaussLegendre(m);
  const double half = 0.5 * (b - a), mid = 0.5 * (a + b);
  double sum = 0.0;
  for (size_t i = 0; i < rule.nodes.size(); ++i) {
    sum += rule.weights[i] * f(mid + half * rule.nodes[i]);
  }
  return sum * half;
}

namespace internal {

template <typename F>
double SimpsonStep(F& f, double a, double b, double fa, double fm, double fb,
                   double whole, double tol, int depth) {
  const double m = 0.5 * (a + b);
  const double lm = 0.5 * (a + m), rm = 0.5 * (m + b);
  const double flm = f(lm), frm = f(rm);
  if (!std::isfinite(flm) || !std::isfinite(frm)) {
    Fail(ErrorCode::kIntegration, "non-finite integrand at x=" +
                                      std::to_string(std::isfinite(flm) ? rm : lm));
  }
  const double left = (m - a) / 6.0 * (fa + 4.0 * flm + fm);
  const double right = (b - m) / 6.0 * (fm + 4.0 * frm + fb);
  const double delta = left + right - whole;
  if (depth <= 0 || std::abs(delta) <= 15.0 * tol) {
    return left + right + delta / 15.0;
  }
  return SimpsonStep(f, a, m, fa, flm, fm, left, 0.5 * tol, depth - 1) +
         SimpsonStep(f, m, b, fm, frm, fb, right, 0.5 * tol, depth - 1);
}

}  // namespace internal

// Adaptive composite Simpson rule with Richardson correction.
template <typename F>
double AdaptiveSimpson(F&& f, double a, double b, double tol = kQuadTol,
                       int max_depth = kQuadMaxDepth) {
  if (b <= a) return 0.0;
  const double m = 0.5 * (a + b);
  const double fa = f(a), fm = f(m), fb = f(b);
  if (!std::isfinite(fa) || !std::isfinite(fm) || !std::isfinite(fb)) {
    Fail(ErrorCode::kIntegration, "non-finite integrand on [" +
                                      std::to_string(a) + ", " +
                                      std::to_string(b) + "]");
  }
  const double whole = (b - a) / 6.0 * (fa + 4.0 * fm + fb);
  return internal::SimpsonStep(f, a, b, fa, fm, fb, whole, tol, max_depth);
}

}  // namespace selgame

#endif  // SELGAME_QUADRATURE_H_
