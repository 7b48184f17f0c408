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

#include "selgame/full_recall.h"

#include <algorithm>
#include <cmath>
#include <cstdio>
#include <map>
#include <string>
#include <tuple>
#include <vector>

#include "selgame/errors.h"
#include "selgame/stage_games.h"

namespace selgame {
namespace {

constexpr int kCellDepth = 30;

inline Pair operator+(const Pair& x, const Pair& y) {
  return {x[0] + y[0], x[1] + y[1]};
}
inline Pair operator-(const Pair& x, const Pair& y) {
  return {x[0] - y[0], x[1] - y[1]};
}
inline Pair operator*(double s, const Pair& x) { return {s * x[0], s * x[1]}; }

double Median(double a, double b, double x) {
  return std::max(std::min(a, b), std::min(std::max(a, b), x));
}

double Horner(const std::vector<double>& c, double x) {
  double v = 0.0;
  for (auto it = c.rbegin(); it != c.rend(); ++it) v = v * x + *it;
  return v;
}

template <typename F>
Pair PairSimpsonStep(F& f, double a, double b, const Pair& fa, const Pair& fm,
                     const Pair& fb, const Pair& whole, double tol, int depth) {
  const double m = 0.5 * (a + b);
  const Pair flm = f(0.5 * (a + m)), frm = f(0.5 * (m + b));
  const Pair left = ((m - a) / 6.0) * (fa + 4.0 * flm + fm);
  const Pair right = ((b - m) / 6.0) * (fm + 4.0 * frm + fb);
  const Pair delta = left + right - whole;
  if (depth <= 0 ||
      std::max(std::abs(delta[0]), std::abs(delta[1])) <= 15.0 * tol) {
    return left + right + (1.0 / 15.0) * delta;
  }
  return PairSimpsonStep(f, a, m, fa, flm, fm, left, 0.5 * tol, depth - 1) +
         PairSimpsonStep(f, m, b, fm, frm, fb, right, 0.5 * tol, depth - 1);
}

template <typename F>
Pair PairSimpson(F&& f, double a, double b, double tol) {
  if (!(a < b)) return {0.0, 0.0};
  const Pair fa = f(a), fm = f(0.5 * (a + b)), fb = f(b);
  const Pair whole = ((b - a) / 6.0) * (fa + 4.0 * fm + fb);
  return PairSimpsonStep(f, a, b, fa, fm, fb, whole, tol, kCellDepth);
}

class GridRecursion final : public PairRecursion {
 public:
  GridRecursion(const Distribution& d, GridConfig grid, StageRule rule)
      : d_(d), grid_(grid), rule_(std::move(rule)) {
    if (grid_.points < 3) Fail(ErrorCode::kArgument, "grid needs at least 3 points");
    if (grid_.points > 8001) Fail(ErrorCode::kResource, "grid larger than 8001 points");
    if (!(grid_.quad_tol > 0.0)) Fail(ErrorCode::kArgument, "quad tolerance must be positive");
    g_ = grid_.points;
    step_ = 1.0 / (g_ - 1);
    cells_.resize(g_ - 1);
    for (int m = 0; m + 1 < g_; ++m) {
      const double lo = Node(m), hi = Node(m + 1);
      for (const DensityPiece& p : d_.pieces()) {
        const double a = std::max(lo, p.lo), b = std::min(hi, p.hi);
        if (a < b) cells_[m].push_back(Sub{a, b, &p.coeffs});
      }
    }
  }

  void Extend(int n) override {
    while (static_cast<int>(tables_.size()) < n) {
      const int k = static_cast<int>(tables_.size()) + 1;
      curves_.emplace_back(d_, k);
      BuildStage(k);
    }
  }

  int depth() const override { return static_cast<int>(tables_.size()); }

  Pair value(int k, double a, double b) const override {
    if (b > a) b = a;
    if (k == 0) return {0.5 * (a + b), 0.5 * (a + b)};
    return rule_(k, a, b, lone_value(k, b), continuation(k, a, b));
  }

  Pair continuation(int k, double a, double b) const override {
    if (k < 1 || k > depth()) Fail(ErrorCode::kArgument, "stage not tabulated");
    if (b > a) b = a;
    return d_.cdf(b) * value(k - 1, a, b) + Interp(tables_[k - 1], a, b);
  }

  double lone_value(int k, double b) const override {
    if (k == 0) return b;
    return curves_[k - 1](b);
  }

 private:
  struct Sub {
    double lo, hi;
    const std::vector<double>* coeffs;
  };

  double Node(int i) const {
    return i == g_ - 1 ? 1.0 : static_cast<double>(i) / (g_ - 1);
  }
  size_t Index(int i, int j) const {
    return static_cast<size_t>(i) * (i + 1) / 2 + j;
  }

  // Piecewise linear interpolation on the triangulated grid.
  Pair Interp(const std::vector<Pair>& t, double a, double b) const {
    const double u = std::clamp(a, 0.0, 1.0) * (g_ - 1);
    const double v = std::clamp(b, 0.0, 1.0) * (g_ - 1);
    const int i0 = std::min(static_cast<int>(u), g_ - 2);
    const int j0 = std::min(static_cast<int>(v), i0);
    const double fu = std::min(u - i0, 1.0), fv = std::clamp(v - j0, 0.0, 1.0);
    const Pair& r00 = t[Index(i0, j0)];
    const Pair& r11 = t[Index(i0 + 1, j0 + 1)];
    if (fv <= fu || j0 == i0) {
      const Pair& r10 = t[Index(i0 + 1, j0)];
      return r00 + fu * (r10 - r00) + fv * (r11 - r10);
    }
    const Pair& r01 = t[Index(i0, j0 + 1)];
    return r00 + fv * (r01 - r00) + fu * (r11 - r01);
  }

  template <typename F>
  Pair CellIntegral(int m, F&& g) const {
    Pair sum = {0.0, 0.0};
    for (const Sub& s : cells_[m]) {
      sum = sum + PairSimpson(
                      [&](double x) { return Horner(*s.coeffs, x) * g(x); },
                      s.lo, s.hi, grid_.quad_tol * (s.hi - s.lo));
    }
    return sum;
  }

  void BuildStage(int k) {
    std::vector<Pair> table(Index(g_ - 1, g_ - 1) + 1);
    std::vector<Pair> rowcum(g_);
    const auto& atoms = d_.atoms();
    std::vector<Pair> atom_row;
    for (int i = 0; i < g_; ++i) {
      const double a = Node(i);
      auto row_g = [&](double x) { return value(k - 1, a, x); };
      auto col_g = [&](double x) { return value(k - 1, x, a); };
      rowcum[0] = {0.0, 0.0};
      for (int m = 0; m < i; ++m) rowcum[m + 1] = rowcum[m] + CellIntegral(m, row_g);
      Pair tail = {0.0, 0.0};
      for (int m = i; m + 1 < g_; ++m) tail = tail + CellIntegral(m, col_g);
      // Atoms: x <= a moves to (a, x); x > a moves to (x, a).
      atom_row.clear();
      for (const Atom& at : atoms) {
        if (at.x > a) {
          tail = tail + at.p * value(k - 1, at.x, a);
        } else {
          atom_row.push_back(at.p * value(k - 1, a, at.x));
        }
      }
      // Walk j downwards, adding atoms in (b_j, a].
      Pair atom_sum = {0.0, 0.0};
      int next = static_cast<int>(atom_row.size()) - 1;
      for (int j = i; j >= 0; --j) {
        const double b = Node(j);
        while (next >= 0 && atoms[next].x > b) atom_sum = atom_sum + atom_row[next--];
        table[Index(i, j)] = rowcum[i] - rowcum[j] + tail + atom_sum;
      }
    }
    tables_.push_back(std::move(table));
  }

  Distribution d_;
  GridConfig grid_;
  StageRule rule_;
  int g_ = 0;
  double step_ = 0.0;
  std::vector<std::vector<Sub>> cells_;
  std::vector<OrderMaxCurve> curves_;
  std::vector<std::vector<Pair>> tables_;
};

class AtomicRecursion final : public PairRecursion {
 public:
  AtomicRecursion(const Distribution& d, StageRule rule)
      : d_(d), rule_(std::move(rule)) {
    if (!d_.is_discrete()) {
      Fail(ErrorCode::kUnsupported, "exact recursion needs a purely discrete law");
    }
  }

  void Extend(int n) override { depth_ = std::max(depth_, n); }
  int depth() const override { return depth_; }

  Pair value(int k, double a, double b) const override {
    if (b > a) b = a;
    if (k == 0) return {0.5 * (a + b), 0.5 * (a + b)};
    const auto key = std::make_tuple(k, a, b);
    auto it = memo_.find(key);
    if (it != memo_.end()) return it->second;
    const Pair v = rule_(k, a, b, lone_value(k, b), continuation(k, a, b));
    memo_.emplace(key, v);
    return v;
  }

  Pair continuation(int k, double a, double b) const override {
    if (k < 1) Fail(ErrorCode::kArgument, "continuation needs k >= 1");
    if (b > a) b = a;
    Pair sum = {0.0, 0.0};
    for (const Atom& at : d_.atoms()) {
      sum = sum + at.p * value(k - 1, std::max(a, at.x), Median(a, b, at.x));
    }
    return sum;
  }

  double lone_value(int k, double b) const override {
    return d_.expect_order_max_with(k, b);
  }

 private:
  Distribution d_;
  StageRule rule_;
  int depth_ = 0;
  mutable std::map<std::tuple<int, double, double>, Pair> memo_;
};

// Closed forms for the uniform law.
double Cont2(double a, double b) {
  return 0.5 * (1.0 + a * a) + (b * b * b - a * a * a) / 6.0;
}
double Take2(double a, double b) { return 0.5 * a + (2.0 + b * b * b) / 6.0; }

Pair Uniform2(double a, double b) {
  const double d = Cont2(a, b);
  const double c = (2.0 + b * b * b) / 3.0;
  const double l = a <= c ? d : Take2(a, b);
  const double h = a <= std::max(c, d) ? d : Take2(a, b);
  return {l, h};
}

// Simpson is exact on the cubic pieces below.
template <typename F>
double Simpson(F&& f, double lo, double hi) {
  if (!(lo < hi)) return 0.0;
  return (hi - lo) / 6.0 * (f(lo) + 4.0 * f(0.5 * (lo + hi)) + f(hi));
}

// Root in [0, 1] of the increasing map x -> x - Cont2(x, a).
double StayRoot(double a) {
  double lo = 0.0, hi = 1.0;
  for (int it = 0; it < 200 && hi - lo > 1e-16; ++it) {
    const double m = 0.5 * (lo + hi);
    (m - Cont2(m, a) < 0.0 ? lo : hi) = m;
  }
  return 0.5 * (lo + hi);
}

// E V_2(a v X, med[a, b, X]) for channel 0 (worst) or 1 (best).
double UniformCont3(int channel, double a, double b) {
  // Row x in (b, a]: state (a, x); stay branch iff x^3 >= thr.
  double thr = 3.0 * a - 2.0;
  if (channel == 1) thr = std::min(thr, 6.0 * a - 3.0 * (1.0 + a * a) + a * a * a);
  const double r = std::clamp(thr <= 0.0 ? 0.0 : std::cbrt(thr), b, a);
  const double row = Simpson([&](double x) { return Take2(a, x); }, b, r) +
                     Simpson([&](double x) { return Cont2(a, x); }, r, a);
  // Column x in (a, 1]: state (x, a); stay branch iff x <= t.
  double t = (2.0 + a * a * a) / 3.0;
  if (channel == 1) t = std::max(t, StayRoot(a));
  t = std::clamp(t, a, 1.0);
  const double col = Simpson([&](double x) { return Cont2(x, a); }, a, t) +
                     Simpson([&](double x) { return Take2(x, a); }, t, 1.0);
  return Uniform2(a, b)[channel] * b + row + col;
}

std::string CacheKey(const Distribution& d, const GridConfig& g) {
  char buf[64];
  std::snprintf(buf, sizeof(buf), "#%d#%.17g", g.points, g.quad_tol);
  return d.fingerprint() + buf;
}

}  // namespace

std::unique_ptr<PairRecursion> MakeGridRecursion(const Distribution& d,
                                                 GridConfig grid,
                                                 StageRule rule) {
  return std::make_unique<GridRecursion>(d, grid, std::move(rule));
}

std::unique_ptr<PairRecursion> MakeAtomicRecursion(const Distribution& d,
                                                   StageRule rule) {
  return std::make_unique<AtomicRecursion>(d, std::move(rule));
}

StageRule WorstBestRule() {
  return [](int, double a, double, double c, const Pair& cont) {
    return Pair{SelectorL(a, c, cont[0]), SelectorH(a, c, cont[1])};
  };
}

double UniformBestThreshold() { return StayRoot(0.0); }

Pair UniformClosedForms(int n, double a, double b) {
  if (n < 1 || n > 3) Fail(ErrorCode::kArgument, "closed forms cover n = 1, 2, 3");
  if (!(0.0 <= b && b <= a && a <= 1.0)) {
    Fail(ErrorCode::kArgument, "closed forms need 0 <= b <= a <= 1");
  }
  if (n == 1) {
    const double v = 0.5 * a + 0.25 * (1.0 + b * b);
    return {v, v};
  }
  if (n == 2) return Uniform2(a, b);
  const double c = 0.75 + 0.25 * b * b * b * b;
  return {SelectorL(a, c, UniformCont3(0, a, b)),
          SelectorH(a, c, UniformCont3(1, a, b))};
}

FullRecallSolver::FullRecallSolver(const Distribution& d, GridConfig grid,
                                   FrMethod method)
    : d_(d), grid_(grid), method_(method) {}

FrMethod FullRecallSolver::method_for(int n) const {
  const bool analytic_ok = d_.is_standard_uniform() && n <= 3;
  switch (method_) {
    case FrMethod::kAnalytic:
      if (!analytic_ok) {
        Fail(ErrorCode::kUnsupported, "closed forms need the uniform law and n <= 3");
      }
      return method_;
    case FrMethod::kExact:
      if (!d_.is_discrete()) {
        Fail(ErrorCode::kUnsupported, "exact recursion needs a purely discrete law");
      }
      return method_;
    case FrMethod::kGrid:
      return method_;
    case FrMethod::kAuto:
      break;
  }
  if (d_.is_discrete()) return FrMethod::kExact;
  if (analytic_ok) return FrMethod::kAnalytic;
  return FrMethod::kGrid;
}

const PairRecursion& FullRecallSolver::engine(int n) {
  std::lock_guard<std::mutex> lock(mu_);
  if (!engine_) {
    const bool exact = method_ == FrMethod::kExact ||
                       (method_ != FrMethod::kGrid && d_.is_discrete());
    engine_ = exact ? MakeAtomicRecursion(d_, WorstBestRule())
                    : MakeGridRecursion(d_, grid_, WorstBestRule());
  }
  engine_->Extend(n);
  return *engine_;
}

Pair FullRecallSolver::lh(int n, double a, double b) {
  if (n < 0) Fail(ErrorCode::kArgument, "n must be >= 0");
  if (!(0.0 <= b && b <= a && a <= 1.0)) {
    Fail(ErrorCode::kArgument, "states need 0 <= b <= a <= 1");
  }
  if (n == 0) return {0.5 * (a + b), 0.5 * (a + b)};
  if (method_for(n) == FrMethod::kAnalytic) return UniformClosedForms(n, a, b);
  return engine(n).value(n, a, b);
}

Pair FullRecallSolver::continuation(int n, double a, double b) {
  if (n < 1) Fail(ErrorCode::kArgument, "continuation needs n >= 1");
  if (!(0.0 <= b && b <= a && a <= 1.0)) {
    Fail(ErrorCode::kArgument, "states need 0 <= b <= a <= 1");
  }
  return engine(n).continuation(n, a, b);
}

FullRecallBand FullRecallSolver::band(int n) {
  if (n < 1) Fail(ErrorCode::kArgument, "band needs n >= 1");
  const Pair v = lh(n, 0.0, 0.0);
  return FullRecallBand{n, v[0], v[1]};
}

std::shared_ptr<FullRecallSolver> SharedFullRecallSolver(const Distribution& d,
                                                         GridConfig grid) {
  static std::mutex mu;
  static std::map<std::string, std::shared_ptr<FullRecallSolver>> cache;
  const std::string key = CacheKey(d, grid);
  std::lock_guard<std::mutex> lock(mu);
  auto& slot = cache[key];
  if (!slot) slot = std::make_shared<FullRecallSolver>(d, grid);
  return slot;
}

Pair LhValues(const Distribution& d, int n, double a, double b,
              GridConfig grid) {
  return SharedFullRecallSolver(d, grid)->lh(n, a, b);
}

FullRecallBand Band(const Distribution& d, int n, GridConfig grid) {
  return SharedFullRecallSolver(d, grid)->band(n);
}

}  // namespace selgame
