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

#include "selgame/oracle.h"

#include <algorithm>
#include <map>
#include <tuple>
#include <utility>

#include "selgame/errors.h"

namespace selgame {
namespace {

using PairSet = std::vector<PayoffPair>;

bool PairLess(const PayoffPair& u, const PayoffPair& v) {
  if (u.x != v.x) return u.x < v.x;
  if (u.y != v.y) return u.y < v.y;
  return u.trace < v.trace;
}

void Dedupe(PairSet& s) {
  std::sort(s.begin(), s.end(), PairLess);
  // Keeps the smallest trace of each payoff.
  s.erase(std::unique(s.begin(), s.end(),
                      [](const PayoffPair& u, const PayoffPair& v) {
                        return u.x == v.x && u.y == v.y;
                      }),
          s.end());
}

// {sum_i p_i v_i : v_i in sets[i]}; traces join the first tag of each v_i.
PairSet Minkowski(const std::vector<PairSet>& sets,
                         const std::vector<Rational>& weights,
                         size_t max_set) {
  PairSet acc = {PayoffPair{Rational(0), Rational(0), ""}};
  for (size_t i = 0; i < sets.size(); ++i) {
    if (acc.size() * sets[i].size() > max_set) {
      Fail(ErrorCode::kResource, "oracle set exceeds the size budget");
    }
    PairSet next;
    next.reserve(acc.size() * sets[i].size());
    for (const PayoffPair& u : acc) {
      for (const PayoffPair& v : sets[i]) {
        std::string trace = u.trace;
        if (i > 0) trace += ',';
        trace += v.trace.empty() ? '-' : v.trace[0];
        next.push_back(PayoffPair{u.x + weights[i] * v.x,
                                  u.y + weights[i] * v.y, std::move(trace)});
      }
    }
    Dedupe(next);
    acc = std::move(next);
  }
  return acc;
}

Rational Power(const Rational& r, int k) {
  Rational out(1);
  for (int i = 0; i < k; ++i) out *= r;
  return out;
}

class Oracle {
 public:
  Oracle(std::vector<RationalAtom> atoms, OracleLimits limits)
      : atoms_(std::move(atoms)), limits_(limits) {
    for (const auto& at : atoms_) weights_.push_back(at.p);
  }

  bool endpoints_only() const { return endpoints_only_; }

  PairSet NoRecall(int n) {
    PairSet prev = {PayoffPair{Rational(0), Rational(0), ""}};
    Rational c(0);
    for (int k = 1; k <= n; ++k) {
      std::vector<PairSet> per_atom;
      for (const auto& at : atoms_) {
        PairSet s;
        for (const PayoffPair& de : prev) {
          const auto out = SolveNoRecallStage<Rational>(at.x, c, de.x, de.y);
          endpoints_only_ = endpoints_only_ || out.continuum;
          for (const auto& eq : out.equilibria) {
            s.push_back(PayoffPair{eq.payoff1, eq.payoff2, std::string(1, out.tag)});
          }
        }
        Dedupe(s);
        per_atom.push_back(std::move(s));
      }
      prev = Minkowski(per_atom, weights_, limits_.max_set);
      Rational next(0);
      for (const auto& at : atoms_) next += at.p * (at.x > c ? at.x : c);
      c = next;
    }
    return prev;
  }

  const PairSet& FullRecall(int k, const Rational& a, const Rational& b) {
    const auto key = std::make_tuple(k, a, b);
    auto it = memo_.find(key);
    if (it != memo_.end()) return it->second;
    PairSet result;
    if (k == 0) {
      const Rational u = (a + b) / 2;
      result.push_back(PayoffPair{u, u, ""});
    } else {
      std::vector<PairSet> children;
      for (const auto& at : atoms_) {
        const Rational hi = at.x > a ? at.x : a;
        const Rational mid = at.x > a ? a : (at.x > b ? at.x : b);
        children.push_back(FullRecall(k - 1, hi, mid));
      }
      const PairSet cont = Minkowski(children, weights_, limits_.max_set);
      const Rational c = LoneValue(k, b);
      for (const PayoffPair& d : cont) {
        const auto out = SolveFullRecallStage<Rational>(a, c, d.x);
        endpoints_only_ = endpoints_only_ || out.continuum;
        for (const auto& eq : out.equilibria) {
          result.push_back(PayoffPair{eq.payoff1, eq.payoff2,
                                      std::string(1, out.tag) + "<" + d.trace + ">"});
        }
      }
      Dedupe(result);
      if (result.size() > limits_.max_set) {
        Fail(ErrorCode::kResource, "oracle set exceeds the size budget");
      }
    }
    return memo_.emplace(key, std::move(result)).first->second;
  }

 private:
  // E(max of k draws v b).
  Rational LoneValue(int k, const Rational& b) const {
    Rational below(0);
    for (const auto& at : atoms_) {
      if (at.x <= b) below += at.p;
    }
    Rational total = b * Power(below, k);
    Rational cum = below;
    for (const auto& at : atoms_) {
      if (at.x <= b) continue;
      const Rational next = cum + at.p;
      total += at.x * (Power(next, k) -
                       Power(cum, k));
      cum = next;
    }
    return total;
  }

  std::vector<RationalAtom> atoms_;
  std::vector<Rational> weights_;
  OracleLimits limits_;
  bool endpoints_only_ = false;
  std::map<std::tuple<int, Rational, Rational>, PairSet> memo_;
};

}  // namespace

std::vector<RationalAtom> RationalLaw(const Distribution& d) {
  if (!d.is_discrete()) {
    Fail(ErrorCode::kUnsupported, "oracle needs a purely discrete distribution");
  }
  std::vector<RationalAtom> out;
  Rational total(0);
  for (const Atom& at : d.atoms()) {
    RationalAtom r;
    r.x = at.exact_x.empty() ? RationalFromDouble(at.x) : ParseRational(at.exact_x);
    r.p = at.exact_p.empty() ? RationalFromDouble(at.p) : ParseRational(at.exact_p);
    total += r.p;
    out.push_back(std::move(r));
  }
  if (total != 1) {
    Fail(ErrorCode::kValidation,
         "atoms: exact masses sum to " + RationalToString(total) + ", not 1");
  }
  std::sort(out.begin(), out.end(),
            [](const RationalAtom& u, const RationalAtom& v) { return u.x < v.x; });
  return out;
}

DiscreteSpepSet OracleSpep(const Distribution& d, int n, Variant variant,
                           const OracleLimits& limits) {
  if (n < 1) Fail(ErrorCode::kArgument, "n must be >= 1");
  if (n > limits.max_n) {
    Fail(ErrorCode::kResource, "oracle horizon above " + std::to_string(limits.max_n));
  }
  std::vector<RationalAtom> atoms = RationalLaw(d);
  if (static_cast<int>(atoms.size()) > limits.max_support) {
    Fail(ErrorCode::kResource,
         "oracle support above " + std::to_string(limits.max_support) + " atoms");
  }
  Oracle oracle(std::move(atoms), limits);
  DiscreteSpepSet out;
  out.variant = variant;
  out.n = n;
  if (variant == Variant::kNoRecall) {
    out.payoffs = oracle.NoRecall(n);
  } else {
    out.payoffs = oracle.FullRecall(n, Rational(0), Rational(0));
  }
  out.endpoints_only = oracle.endpoints_only();
  return out;
}

OracleSummary SummarizeOracle(const DiscreteSpepSet& set) {
  if (set.payoffs.empty()) Fail(ErrorCode::kArgument, "empty payoff set");
  OracleSummary s;
  bool first = true;
  for (const PayoffPair& p : set.payoffs) {
    const Rational sum = p.x + p.y;
    const Rational lo = p.x < p.y ? p.x : p.y;
    const Rational hi = p.x < p.y ? p.y : p.x;
    if (first || sum > s.best_sum) s.best_sum = sum;
    if (first || sum < s.worst_sum) s.worst_sum = sum;
    if (first || lo < s.worst_single) s.worst_single = lo;
    if (first || hi > s.best_single) s.best_single = hi;
    first = false;
  }
  return s;
}

nlohmann::json RationalJson(const Rational& r) {
  return {{"num", boost::multiprecision::numerator(r).str()},
          {"den", boost::multiprecision::denominator(r).str()},
          {"value", RationalToDouble(r)}};
}

nlohmann::json OracleJson(const DiscreteSpepSet& set) {
  nlohmann::json pays = nlohmann::json::array();
  for (const PayoffPair& p : set.payoffs) {
    pays.push_back({{"x", RationalJson(p.x)},
                    {"y", RationalJson(p.y)},
                    {"trace", p.trace}});
  }
  const OracleSummary s = SummarizeOracle(set);
  return {{"variant", set.variant == Variant::kFullRecall ? "fullrecall" : "norecall"},
          {"n", set.n},
          {"endpoints_only", set.endpoints_only},
          {"payoffs", pays},
          {"summary",
           {{"best_sum", RationalJson(s.best_sum)},
            {"worst_sum", RationalJson(s.worst_sum)},
            {"worst_single", RationalJson(s.worst_single)},
            {"best_single", RationalJson(s.best_single)}}}};
}

}  // namespace selgame
