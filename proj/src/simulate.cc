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

#include "selgame/simulate.h"

#include <algorithm>
#include <cmath>
#include <random>

#include "selgame/errors.h"
#include "selgame/prophet.h"

namespace selgame {
namespace {

constexpr double kGapTol = 1e-9;

using Kind = NoRecallPlans::Kind;
using Plan = NoRecallPlans::Plan;

Plan Worst(int seat, int level) {
  return Plan{seat == 0 ? Kind::kWorstFor1 : Kind::kWorstFor2, level, 0.0};
}
Plan Diagonal(int level, double x) { return Plan{Kind::kDiagonal, level, x}; }

std::vector<double> SortedCuts(std::vector<double> v) {
  for (double& x : v) x = std::clamp(x, 0.0, 1.0);
  v.push_back(0.0);
  v.push_back(1.0);
  std::sort(v.begin(), v.end());
  v.erase(std::unique(v.begin(), v.end()), v.end());
  return v;
}

// Integral of g dF over [0, 1], split at the given cuts.
template <typename G>
double IntegratePieces(const Distribution& d, const std::vector<double>& cuts,
                       G&& g, double tol) {
  double sum = 0.0;
  for (size_t i = 0; i + 1 < cuts.size(); ++i) {
    sum += d.partial_expectation(cuts[i], cuts[i + 1], g, i == 0, tol);
  }
  return sum;
}

struct Ctx {
  Variant variant;
  int seat;
  // Arrivals still to come after the current one.
  int k;
  double a;
  double b;
  // Lone value of whoever does not get a now.
  double c;
};

double StatelessBid(const Strategy& s, const Ctx& ctx) {
  struct Visitor {
    const Ctx& ctx;
    double operator()(const AlwaysBid&) const { return 1.0; }
    double operator()(const NeverBid&) const { return 0.0; }
    double operator()(const ProphetThreshold&) const {
      return ctx.a >= ctx.c ? 1.0 : 0.0;
    }
    double operator()(const ThresholdStrategy& t) const {
      if (ctx.k >= static_cast<int>(t.thresholds.size())) return 1.0;
      return ctx.a >= t.thresholds[ctx.k] ? 1.0 : 0.0;
    }
    double operator()(const FullRecallSpe& f) const {
      return f.policy->Bids(ctx.k, ctx.a, ctx.b) ? 1.0 : 0.0;
    }
    double operator()(const NoRecallSpe&) const {
      Fail(ErrorCode::kUnsupported, "plan strategies are not stateless");
    }
  };
  return std::visit(Visitor{ctx}, s);
}

bool IsNever(const Strategy& s) { return std::holds_alternative<NeverBid>(s); }

void CheckStrategy(const Strategy& s, int n, Variant variant) {
  if (const auto* f = std::get_if<FullRecallSpe>(&s)) {
    if (variant != Variant::kFullRecall) {
      Fail(ErrorCode::kUnsupported, "full-recall equilibrium used without recall");
    }
    if (!f->policy || f->policy->n() != n) {
      Fail(ErrorCode::kArgument, "strategy built for a different horizon");
    }
  }
  if (const auto* p = std::get_if<NoRecallSpe>(&s)) {
    if (variant != Variant::kNoRecall) {
      Fail(ErrorCode::kUnsupported, "no-recall equilibrium used with recall");
    }
    if (!p->plans || p->plans->n() != n) {
      Fail(ErrorCode::kArgument, "strategy built for a different horizon");
    }
  }
}

class Agent {
 public:
  virtual ~Agent() = default;
  virtual void Reset() {}
  virtual double Bid(const Ctx& ctx) = 0;
  virtual void BothPassed(const Ctx&) {}
};

class StatelessAgent final : public Agent {
 public:
  explicit StatelessAgent(Strategy s) : s_(std::move(s)) {}
  double Bid(const Ctx& ctx) override { return StatelessBid(s_, ctx); }

 private:
  Strategy s_;
};

class PlanAgent final : public Agent {
 public:
  PlanAgent(std::shared_ptr<const NoRecallPlans> plans, Which which)
      : plans_(std::move(plans)), which_(which) {}
  void Reset() override { cur_ = plans_->Start(which_); }
  double Bid(const Ctx& ctx) override {
    return plans_->Prescribe(cur_, ctx.a).bid[ctx.seat];
  }
  void BothPassed(const Ctx& ctx) override {
    cur_ = plans_->AfterBothPass(cur_, ctx.a);
  }

 private:
  std::shared_ptr<const NoRecallPlans> plans_;
  Which which_;
  Plan cur_;
};

std::unique_ptr<Agent> MakeAgent(const Strategy& s) {
  if (const auto* p = std::get_if<NoRecallSpe>(&s)) {
    return std::make_unique<PlanAgent>(p->plans, p->which);
  }
  return std::make_unique<StatelessAgent>(s);
}

// Stream seed for run r; any fixed bijective mixing works.
uint64_t RunSeed(uint64_t seed, int64_t run) {
  uint64_t z = seed + 0x9E3779B97F4A7C15ull * (static_cast<uint64_t>(run) + 1);
  z = (z ^ (z >> 30)) * 0xBF58476D1CE4E5B9ull;
  z = (z ^ (z >> 27)) * 0x94D049BB133111EBull;
  return z ^ (z >> 31);
}

}  // namespace

std::string StrategyName(const Strategy& s) {
  struct Visitor {
    std::string operator()(const AlwaysBid&) const { return "always"; }
    std::string operator()(const NeverBid&) const { return "never"; }
    std::string operator()(const ProphetThreshold&) const { return "prophet"; }
    std::string operator()(const ThresholdStrategy&) const { return "threshold"; }
    std::string operator()(const FullRecallSpe& f) const {
      return f.policy->which() == Which::kBest ? "fullrecall-best" : "fullrecall-worst";
    }
    std::string operator()(const NoRecallSpe& p) const {
      return p.which == Which::kBest ? "norecall-best" : "norecall-worst";
    }
  };
  return std::visit(Visitor{}, s);
}

// ---------------------------------------------------------------------------
// FullRecallPolicy

FullRecallPolicy::FullRecallPolicy(const Distribution& d, int n, Which which,
                                   GridConfig grid)
    : d_(d), n_(n), which_(which) {
  if (n < 1) Fail(ErrorCode::kArgument, "n must be >= 1");
  solver_ = SharedFullRecallSolver(d, grid);
  engine_ = &solver_->engine(n);
}

double FullRecallPolicy::LoneValue(int k, double b) const {
  return k == 0 ? b : engine_->lone_value(k, b);
}

bool FullRecallPolicy::Bids(int k, double a, double b) const {
  if (k <= 0) return true;
  const double c = engine_->lone_value(k, b);
  if (which_ == Which::kWorst) return a > c + kStageTol;
  if (a <= c + kStageTol) return false;
  return a > engine_->continuation(k, a, b)[1] + kStageTol;
}

double FullRecallPolicy::Threshold(int k, double b) const {
  if (Bids(k, b, b)) return b;
  if (!Bids(k, 1.0, b)) return 1.0;
  double lo = b, hi = 1.0;
  for (int it = 0; it < 60; ++it) {
    const double m = 0.5 * (lo + hi);
    (Bids(k, m, b) ? hi : lo) = m;
  }
  return hi;
}

// ---------------------------------------------------------------------------
// NoRecallPlans

NoRecallPlans::NoRecallPlans(const Distribution& d, int n, int table_points)
    : d_(d), n_(n) {
  if (n < 1) Fail(ErrorCode::kArgument, "n must be >= 1");
  if (table_points < 3) Fail(ErrorCode::kArgument, "table needs at least 3 points");
  const std::vector<NoRecallSummary> series = NoRecallSeries(d, n);
  levels_.resize(n + 1);
  levels_[0].nodes = {0.0, 1.0};
  levels_[0].cum_gap = {0.0, 0.0};
  levels_[0].cum_adv = {0.0, 0.0};
  for (int r = 1; r <= n; ++r) {
    const Level& p = levels_[r - 1];
    Level& L = levels_[r];
    const NoRecallSummary& s = series[r - 1];
    L.ap = s.alpha_prime;
    L.al = s.alpha;
    L.be = s.beta;
    L.pap = p.ap;
    L.pal = p.al;
    L.pbe = p.be;
    L.c = s.prophet[r - 1];
    NoRecallSummary prev;
    prev.n = r - 1;
    prev.alpha_prime = p.ap;
    prev.alpha = p.al;
    prev.beta = p.be;
    prev.prophet.assign(s.prophet.begin(), s.prophet.begin() + r);

    const double c = L.c;
    L.w = IntegratePieces(
        d_, SortedCuts({L.pap, c}),
        [&](double a) { return a < L.pap ? p.w : (a < c ? c : 0.5 * (a + c)); },
        1e-12);

    std::vector<double> nodes;
    for (int i = 0; i < table_points; ++i) {
      nodes.push_back(static_cast<double>(i) / (table_points - 1));
    }
    for (double x : {L.pap, L.pal, L.pbe, c, 2.0 * L.pal - c, 2.0 * L.pbe - c}) {
      nodes.push_back(x);
    }
    L.nodes = SortedCuts(nodes);
    L.cum_gap.assign(L.nodes.size(), 0.0);
    L.cum_adv.assign(L.nodes.size(), 0.0);
    auto gap = [&](double a) {
      const ValueSelectors v = PerValueSelectors(prev, a);
      return v.two_alpha - v.two_beta;
    };
    auto adv = [&](double a) { return a - c; };
    for (size_t i = 0; i + 1 < L.nodes.size(); ++i) {
      const double lo = L.nodes[i], hi = L.nodes[i + 1];
      L.cum_gap[i + 1] = L.cum_gap[i] + d_.partial_expectation(lo, hi, gap, false, 1e-13);
      L.cum_adv[i + 1] = L.cum_adv[i] + d_.partial_expectation(lo, hi, adv, false, 1e-13);
    }
  }
}

double NoRecallPlans::Interp(const Level& L, const std::vector<double>& ys,
                             double a) const {
  if (a <= L.nodes.front()) return ys.front();
  if (a >= L.nodes.back()) return ys.back();
  const size_t j = std::upper_bound(L.nodes.begin(), L.nodes.end(), a) - L.nodes.begin();
  const double x0 = L.nodes[j - 1], x1 = L.nodes[j];
  const double w = x1 > x0 ? (a - x0) / (x1 - x0) : 0.0;
  return ys[j - 1] + w * (ys[j] - ys[j - 1]);
}

double NoRecallPlans::InvertCum(const Level& L, const std::vector<double>& ys,
                                double target) const {
  // ys is non-increasing on the searched prefix.
  size_t lo = 0, hi = ys.size() - 1;
  if (target >= ys[lo]) return L.nodes[lo];
  if (target <= ys[hi]) return L.nodes[hi];
  while (hi - lo > 1) {
    const size_t mid = (lo + hi) / 2;
    (ys[mid] > target ? lo : hi) = mid;
  }
  const double dy = ys[hi] - ys[lo];
  const double w = dy < 0.0 ? (target - ys[lo]) / dy : 0.0;
  return L.nodes[lo] + w * (L.nodes[hi] - L.nodes[lo]);
}

double NoRecallPlans::Split(const Level& L, double lo, double hi) const {
  if (!(lo < hi)) return lo;
  const double target = 0.5 * (Interp(L, L.cum_adv, lo) + Interp(L, L.cum_adv, hi));
  // cum_adv decreases on [0, c], which contains [lo, hi].
  size_t a = std::upper_bound(L.nodes.begin(), L.nodes.end(), lo) - L.nodes.begin();
  size_t b = std::lower_bound(L.nodes.begin(), L.nodes.end(), hi) - L.nodes.begin();
  a = a == 0 ? 0 : a - 1;
  b = std::min(b, L.nodes.size() - 1);
  while (b - a > 1) {
    const size_t mid = (a + b) / 2;
    (L.cum_adv[mid] > target ? a : b) = mid;
  }
  const double dy = L.cum_adv[b] - L.cum_adv[a];
  const double w = dy < 0.0 ? (target - L.cum_adv[a]) / dy : 0.0;
  return std::clamp(L.nodes[a] + w * (L.nodes[b] - L.nodes[a]), lo, hi);
}

double NoRecallPlans::DiagonalCut(int r, double x) const {
  const Level& L = levels_.at(r);
  return InvertCum(L, L.cum_gap, 2.0 * (x - L.be));
}

NoRecallPlans::Plan NoRecallPlans::Start(Which which) const {
  const Level& L = levels_[n_];
  return Diagonal(n_, which == Which::kBest ? L.be : L.al);
}

NoRecallPlans::Prescription NoRecallPlans::Prescribe(const Plan& p,
                                                     double a) const {
  if (p.level < 1 || p.level > n_) Fail(ErrorCode::kArgument, "plan level out of range");
  const Level& L = levels_[p.level];
  const int r = p.level;
  const double c = L.c;
  Prescription out;
  auto both = [&](double q, Plan next) {
    out.bid = {q, q};
    out.next = next;
    return out;
  };
  auto taker = [&](int seat, Plan next) {
    out.bid = {seat == 0 ? 1.0 : 0.0, seat == 0 ? 0.0 : 1.0};
    out.next = next;
    return out;
  };
  if (p.kind != Kind::kDiagonal) {
    const int victim = p.kind == Kind::kWorstFor1 ? 0 : 1;
    const Plan stay = Worst(victim, r - 1);
    if (a < L.pap) return both(0.0, stay);
    if (a < c) return taker(victim, stay);
    return both(1.0, stay);
  }
  const double t = DiagonalCut(r, p.x);
  const Plan to_alpha = Diagonal(r - 1, L.pal);
  const Plan to_beta = Diagonal(r - 1, L.pbe);
  if (a < t) {
    if (a < L.pap) return both(0.0, to_alpha);
    if (a < L.pal) {
      const double hi = std::min({L.pal, 2.0 * L.pal - c, t});
      if (a < hi) {
        const int seat = a < Split(L, L.pap, hi) ? 0 : 1;
        return taker(seat, Worst(seat, r - 1));
      }
      return both(0.0, to_alpha);
    }
    if (a < L.pbe) return both(0.0, Diagonal(r - 1, a));
    if (a < c) return both(2.0 * (a - L.pbe) / (a + c - 2.0 * L.pbe), to_beta);
    return both(1.0, to_beta);
  }
  if (a < L.pap) return both(0.0, to_beta);
  if (a < c) {
    const double lo = std::max({L.pap, 2.0 * L.pbe - c, t});
    if (a >= lo) {
      const int seat = a < Split(L, lo, c) ? 0 : 1;
      return taker(seat, Worst(seat, r - 1));
    }
    return both(0.0, to_beta);
  }
  return both(1.0, to_beta);
}

NoRecallPlans::Plan NoRecallPlans::AfterBothPass(const Plan& p, double a) const {
  const Prescription pr = Prescribe(p, a);
  if (pr.bid[0] >= 1.0 && pr.bid[1] <= 0.0) return Worst(0, p.level - 1);
  if (pr.bid[1] >= 1.0 && pr.bid[0] <= 0.0) return Worst(1, p.level - 1);
  return pr.next;
}

double NoRecallPlans::Payoff(const Plan& p, int seat) const {
  const Level& L = levels_.at(p.level);
  switch (p.kind) {
    case Kind::kWorstFor1:
      return seat == 0 ? L.ap : L.w;
    case Kind::kWorstFor2:
      return seat == 1 ? L.ap : L.w;
    case Kind::kDiagonal:
      break;
  }
  return p.x;
}

std::vector<double> NoRecallPlans::Cuts(const Plan& p) const {
  const Level& L = levels_.at(p.level);
  const double c = L.c;
  if (p.kind != Kind::kDiagonal) return SortedCuts({L.pap, c});
  const double t = DiagonalCut(p.level, p.x);
  const double a_hi = std::min({L.pal, 2.0 * L.pal - c, t});
  const double b_lo = std::max({L.pap, 2.0 * L.pbe - c, t});
  std::vector<double> cuts = {t, L.pap, L.pal, L.pbe, c, a_hi, b_lo};
  if (L.pap < a_hi) cuts.push_back(Split(L, L.pap, a_hi));
  if (b_lo < c) cuts.push_back(Split(L, b_lo, c));
  return SortedCuts(cuts);
}

Strategy SpeStrategy(const Distribution& d, int n, Variant variant,
                     Which which, GridConfig grid) {
  if (variant == Variant::kFullRecall) {
    return FullRecallSpe{std::make_shared<FullRecallPolicy>(d, n, which, grid)};
  }
  if (!d.is_continuous()) {
    Fail(ErrorCode::kUnsupported,
         "no-recall equilibrium strategies need an atomless law");
  }
  return NoRecallSpe{std::make_shared<NoRecallPlans>(d, n), which};
}

// ---------------------------------------------------------------------------
// Play

SimulationReport Play(const Distribution& d, int n, Variant variant,
                      const Strategy& s1, const Strategy& s2,
                      const SimulationConfig& config) {
  if (n < 1) Fail(ErrorCode::kArgument, "n must be >= 1");
  if (config.runs < 1) Fail(ErrorCode::kArgument, "runs must be >= 1");
  CheckStrategy(s1, n, variant);
  CheckStrategy(s2, n, variant);
  const bool recall = variant == Variant::kFullRecall;
  const std::vector<double> prophet = ProphetValues(d, n);
  std::vector<OrderMaxCurve> curves;
  if (recall) {
    for (int k = 1; k < n; ++k) curves.emplace_back(d, k);
  }
  std::array<std::unique_ptr<Agent>, 2> agents = {MakeAgent(s1), MakeAgent(s2)};
  const std::array<bool, 2> never = {IsNever(s1), IsNever(s2)};

  std::array<double, 2> sum{}, sumsq{};
  std::uniform_real_distribution<double> unit(0.0, 1.0);
  for (int64_t run = 0; run < config.runs; ++run) {
    std::mt19937_64 rng(RunSeed(config.seed, run));
    auto draw_unit = [&] {
      double u = 0.0;
      while (u == 0.0) u = unit(rng);
      return u;
    };
    for (auto& ag : agents) ag->Reset();
    std::array<double, 2> pay{};
    double a = 0.0, b = 0.0;
    for (int t = 1; t <= n; ++t) {
      const double x = d.quantile(draw_unit());
      const int k = n - t;
      double c;
      if (recall) {
        if (x > a) {
          b = a;
          a = x;
        } else if (x > b) {
          b = x;
        }
        c = k == 0 ? b : curves[k - 1](b);
      } else {
        a = x;
        b = 0.0;
        c = prophet[k];
      }
      std::array<bool, 2> bids{};
      for (int s = 0; s < 2; ++s) {
        const Ctx ctx{variant, s, k, a, b, c};
        double p = agents[s]->Bid(ctx);
        // The last stage forces a pick when values can be recalled.
        if (recall && k == 0) p = 1.0;
        bids[s] = p >= 1.0 || (p > 0.0 && unit(rng) < p);
      }
      if (bids[0] || bids[1]) {
        auto lone = [&](int s) { return !recall && never[s] ? 0.0 : c; };
        int winner = bids[0] ? 0 : 1;
        if (bids[0] && bids[1]) winner = unit(rng) < 0.5 ? 0 : 1;
        pay[winner] = a;
        pay[1 - winner] = lone(1 - winner);
        break;
      }
      for (int s = 0; s < 2; ++s) agents[s]->BothPassed(Ctx{variant, s, k, a, b, c});
    }
    for (int s = 0; s < 2; ++s) {
      sum[s] += pay[s];
      sumsq[s] += pay[s] * pay[s];
    }
  }
  SimulationReport rep;
  rep.runs = config.runs;
  rep.seed = config.seed;
  const double runs = static_cast<double>(config.runs);
  for (int s = 0; s < 2; ++s) {
    rep.mean[s] = sum[s] / runs;
    const double var = config.runs > 1
                           ? std::max(0.0, (sumsq[s] - runs * rep.mean[s] * rep.mean[s]) /
                                               (runs - 1.0))
                           : 0.0;
    rep.stderr_[s] = std::sqrt(var / runs);
  }
  return rep;
}

// ---------------------------------------------------------------------------
// Best response

namespace {

GapReport FullRecallGap(const Distribution& d, int n, const Strategy& fixed,
                        const GapConfig& config) {
  StageRule rule = [&fixed](int k, double a, double b, double c, const Pair& cont) {
    const double q = StatelessBid(fixed, Ctx{Variant::kFullRecall, 1, k, a, b, c});
    const double bid = q * 0.5 * (a + c) + (1.0 - q) * a;
    const double v = std::max(bid, q * c + (1.0 - q) * cont[0]);
    const double u = q * bid + (1.0 - q) * (q * c + (1.0 - q) * cont[1]);
    return Pair{v, u};
  };
  std::unique_ptr<PairRecursion> engine =
      d.is_discrete() ? MakeAtomicRecursion(d, rule)
                      : MakeGridRecursion(d, config.grid, rule);
  engine->Extend(n);
  // Expectation over the first arrival; value(n, 0, 0) would add a stage
  // with nothing on the table, where a stateless opponent may still bid.
  const Pair v = engine->continuation(n, 0.0, 0.0);
  GapReport out;
  out.best_response = {v[0], v[0]};
  out.profile = {v[1], v[1]};
  out.gap = v[0] - v[1];
  return out;
}

GapReport StatelessNoRecallGap(const Distribution& d, int n,
                               const Strategy& fixed) {
  const std::vector<double> c = ProphetValues(d, n);
  const bool never = IsNever(fixed);
  double v = 0.0, u = 0.0;
  for (int r = 1; r <= n; ++r) {
    const double cr = c[r - 1];
    std::vector<double> cuts = {cr};
    if (const auto* t = std::get_if<ThresholdStrategy>(&fixed)) {
      if (r - 1 < static_cast<int>(t->thresholds.size())) {
        cuts.push_back(t->thresholds[r - 1]);
      }
    }
    cuts = SortedCuts(cuts);
    const double pv = v, pu = u;
    auto q_at = [&](double a) {
      return StatelessBid(fixed, Ctx{Variant::kNoRecall, 1, r - 1, a, 0.0, cr});
    };
    v = IntegratePieces(d, cuts, [&](double a) {
      const double q = q_at(a);
      return std::max(q * 0.5 * (a + cr) + (1.0 - q) * a, q * cr + (1.0 - q) * pv);
    }, kGapTol);
    u = IntegratePieces(d, cuts, [&](double a) {
      const double q = q_at(a);
      const double lone = never ? 0.0 : cr;
      const double bid = q * 0.5 * (a + cr) + (1.0 - q) * a;
      return q * bid + (1.0 - q) * (q * lone + (1.0 - q) * pu);
    }, kGapTol);
  }
  GapReport out;
  out.best_response = {v, v};
  out.profile = {u, u};
  out.gap = v - u;
  return out;
}

// Dynamic program for one seat against the plan machine of the other.
std::array<double, 2> PlanSeatValues(const NoRecallPlans& plans, Which which,
                                     int seat, int points) {
  struct Values {
    std::array<double, 2> vw{}, uw{};
    std::vector<double> xs = {0.0}, vd = {0.0}, ud = {0.0};
  };
  auto at = [](const Values& vals, const Plan& p, bool v_channel) {
    if (p.kind == Kind::kWorstFor1) return v_channel ? vals.vw[0] : vals.uw[0];
    if (p.kind == Kind::kWorstFor2) return v_channel ? vals.vw[1] : vals.uw[1];
    const auto& ys = v_channel ? vals.vd : vals.ud;
    if (vals.xs.size() == 1 || p.x <= vals.xs.front()) return ys.front();
    if (p.x >= vals.xs.back()) return ys.back();
    const size_t j = std::upper_bound(vals.xs.begin(), vals.xs.end(), p.x) - vals.xs.begin();
    const double w = (p.x - vals.xs[j - 1]) / (vals.xs[j] - vals.xs[j - 1]);
    return ys[j - 1] + w * (ys[j] - ys[j - 1]);
  };
  const Distribution& d = plans.distribution();
  Values prev;
  const int other = 1 - seat;
  for (int r = 1; r <= plans.n(); ++r) {
    const NoRecallPlans::Level& L = plans.level(r);
    const double c = L.c;
    auto evaluate = [&](const Plan& p) {
      std::vector<double> cuts = plans.Cuts(p);
      for (double x : prev.xs) {
        if (x > L.pal && x < L.pbe) cuts.push_back(x);
      }
      cuts = SortedCuts(cuts);
      auto integrand = [&](double a, bool v_channel) {
        const NoRecallPlans::Prescription pr = plans.Prescribe(p, a);
        const double own = pr.bid[seat], q = pr.bid[other];
        const double bid = q * 0.5 * (a + c) + (1.0 - q) * a;
        if (v_channel) {
          const Plan dev = own >= 1.0 && q <= 0.0 ? Worst(seat, r - 1) : pr.next;
          return std::max(bid, q * c + (1.0 - q) * at(prev, dev, true));
        }
        return own * bid + (1.0 - own) * (q * c + (1.0 - q) * at(prev, pr.next, false));
      };
      return std::array<double, 2>{
          IntegratePieces(d, cuts, [&](double a) { return integrand(a, true); }, kGapTol),
          IntegratePieces(d, cuts, [&](double a) { return integrand(a, false); }, kGapTol)};
    };
    Values cur;
    for (int i = 0; i < 2; ++i) {
      const auto vu = evaluate(Worst(i, r));
      cur.vw[i] = vu[0];
      cur.uw[i] = vu[1];
    }
    const int m = L.be - L.al > 1e-14 ? points : 1;
    cur.xs.assign(m, L.al);
    cur.vd.assign(m, 0.0);
    cur.ud.assign(m, 0.0);
    for (int j = 0; j < m; ++j) {
      if (m > 1) cur.xs[j] = L.al + (L.be - L.al) * j / (m - 1);
      const auto vu = evaluate(Diagonal(r, cur.xs[j]));
      cur.vd[j] = vu[0];
      cur.ud[j] = vu[1];
    }
    prev = std::move(cur);
  }
  const Plan start = plans.Start(which);
  return {at(prev, start, true), at(prev, start, false)};
}

}  // namespace

GapReport BestResponseGap(const Distribution& d, int n, Variant variant,
                          const Strategy& fixed, const GapConfig& config) {
  if (n < 1) Fail(ErrorCode::kArgument, "n must be >= 1");
  CheckStrategy(fixed, n, variant);
  if (variant == Variant::kFullRecall) return FullRecallGap(d, n, fixed, config);
  const auto* plan = std::get_if<NoRecallSpe>(&fixed);
  if (!plan) return StatelessNoRecallGap(d, n, fixed);
  if (config.diagonal_points < 2) {
    Fail(ErrorCode::kArgument, "diagonal needs at least 2 points");
  }
  if (static_cast<int64_t>(config.diagonal_points) * n > 100000) {
    Fail(ErrorCode::kResource, "best-response state space too large");
  }
  GapReport out;
  for (int seat = 0; seat < 2; ++seat) {
    const auto vu = PlanSeatValues(*plan->plans, plan->which, seat,
                                   config.diagonal_points);
    out.best_response[seat] = vu[0];
    out.profile[seat] = vu[1];
  }
  out.gap = std::max(out.best_response[0] - out.profile[0],
                     out.best_response[1] - out.profile[1]);
  return out;
}

}  // namespace selgame
