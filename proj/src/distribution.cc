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

#include "selgame/distribution.h"

#include <algorithm>
#include <cmath>
#include <cstdio>
#include <utility>

#include "selgame/errors.h"
#include "selgame/quadrature.h"

namespace selgame {
namespace {

constexpr double kMassTol = 1e-12;

double Horner(const std::vector<double>& c, double x) {
  double v = 0.0;
  for (auto it = c.rbegin(); it != c.rend(); ++it) v = v * x + *it;
  return v;
}

std::string Num(double v) {
  char buf[32];
  std::snprintf(buf, sizeof(buf), "%.17g", v);
  return buf;
}

int GaussNodesFor(int degree) { return degree / 2 + 2; }

}  // namespace

Distribution Distribution::Uniform() {
  return Make({}, {DensityPiece{0.0, 1.0, {1.0}}});
}

Distribution Distribution::PointMass(double v) {
  return Discrete({Atom{v, 1.0, "", ""}});
}

Distribution Distribution::Discrete(std::vector<Atom> atoms) {
  return Make(std::move(atoms), {});
}

Distribution Distribution::Mixture(double eta, const Distribution& discrete) {
  if (!(eta >= 0.0 && eta <= 1.0)) {
    Fail(ErrorCode::kValidation, "mixture: eta must lie in [0,1]");
  }
  if (!discrete.is_discrete()) {
    Fail(ErrorCode::kValidation, "mixture: discrete part has a density");
  }
  std::vector<Atom> atoms;
  if (eta < 1.0) {
    for (const Atom& a : discrete.atoms()) {
      atoms.push_back(Atom{a.x, (1.0 - eta) * a.p, a.exact_x, ""});
    }
  }
  std::vector<DensityPiece> pieces;
  if (eta > 0.0) pieces.push_back(DensityPiece{0.0, 1.0, {eta}});
  return Make(std::move(atoms), std::move(pieces));
}

Distribution Distribution::Make(std::vector<Atom> atoms,
                                std::vector<DensityPiece> pieces) {
  Distribution d;
  d.atoms_ = std::move(atoms);
  d.pieces_ = std::move(pieces);
  d.Finalize();
  return d;
}

void Distribution::Finalize() {
  std::sort(atoms_.begin(), atoms_.end(),
            [](const Atom& l, const Atom& r) { return l.x < r.x; });
  double total = 0.0;
  for (size_t i = 0; i < atoms_.size(); ++i) {
    const Atom& a = atoms_[i];
    if (!std::isfinite(a.x) || a.x < 0.0 || a.x > 1.0) {
      Fail(ErrorCode::kValidation,
           "atoms[" + std::to_string(i) + "].x must lie in [0,1]");
    }
    if (!std::isfinite(a.p) || a.p <= 0.0 || a.p > 1.0 + kMassTol) {
      Fail(ErrorCode::kValidation,
           "atoms[" + std::to_string(i) + "].p must lie in (0,1]");
    }
    if (i > 0 && atoms_[i - 1].x == a.x) {
      Fail(ErrorCode::kValidation,
           "atoms: duplicate value " + Num(a.x));
    }
    total += a.p;
  }
  std::sort(pieces_.begin(), pieces_.end(),
            [](const DensityPiece& l, const DensityPiece& r) {
              return l.lo < r.lo;
            });
  antideriv_.clear();
  cdf_degree_ = 0;
  for (size_t i = 0; i < pieces_.size(); ++i) {
    const DensityPiece& p = pieces_[i];
    const std::string where = "pieces[" + std::to_string(i) + "]";
    if (!std::isfinite(p.lo) || !std::isfinite(p.hi) || p.lo < 0.0 ||
        p.hi > 1.0 || !(p.lo < p.hi)) {
      Fail(ErrorCode::kValidation, where + ": need 0 <= lo < hi <= 1");
    }
    if (i > 0 && pieces_[i - 1].hi > p.lo) {
      Fail(ErrorCode::kValidation, where + ": pieces overlap");
    }
    if (p.coeffs.empty()) {
      Fail(ErrorCode::kValidation, where + ".coeffs is empty");
    }
    for (double c : p.coeffs) {
      if (!std::isfinite(c)) {
        Fail(ErrorCode::kValidation, where + ".coeffs has a non-finite entry");
      }
    }
    for (int k = 0; k <= 64; ++k) {
      const double x = p.lo + (p.hi - p.lo) * k / 64.0;
      if (Horner(p.coeffs, x) < -1e-9) {
        Fail(ErrorCode::kValidation,
             where + ": density is negative at x=" + Num(x));
      }
    }
    std::vector<double> anti(p.coeffs.size() + 1, 0.0);
    for (size_t k = 0; k < p.coeffs.size(); ++k) {
      anti[k + 1] = p.coeffs[k] / static_cast<double>(k + 1);
    }
    anti[0] = -Horner(anti, p.lo);
    total += Horner(anti, p.hi);
    antideriv_.push_back(std::move(anti));
    cdf_degree_ = std::max<int>(cdf_degree_, p.coeffs.size());
  }
  if (atoms_.empty() && pieces_.empty()) {
    Fail(ErrorCode::kValidation, "distribution has no mass");
  }
  if (std::abs(total - 1.0) > kMassTol) {
    Fail(ErrorCode::kValidation,
         "total mass must be 1 within 1e-12, got " + Num(total));
  }

  // Segments.
  std::vector<double> cuts = {0.0, 1.0};
  for (const Atom& a : atoms_) cuts.push_back(a.x);
  for (const DensityPiece& p : pieces_) {
    cuts.push_back(p.lo);
    cuts.push_back(p.hi);
  }
  std::sort(cuts.begin(), cuts.end());
  cuts.erase(std::unique(cuts.begin(), cuts.end()), cuts.end());
  segments_.clear();
  seg_starts_.clear();
  double f = 0.0;
  size_t next_atom = 0;
  for (size_t i = 0; i + 1 < cuts.size(); ++i) {
    Segment s;
    s.lo = cuts[i];
    s.hi = cuts[i + 1];
    const double mid = 0.5 * (s.lo + s.hi);
    for (size_t k = 0; k < pieces_.size(); ++k) {
      if (pieces_[k].lo <= mid && mid < pieces_[k].hi) s.piece = static_cast<int>(k);
    }
    while (next_atom < atoms_.size() && atoms_[next_atom].x <= s.lo) {
      f += atoms_[next_atom++].p;
    }
    s.f_lo = std::min(f, 1.0);
    if (s.piece >= 0) {
      const auto& anti = antideriv_[s.piece];
      f += Horner(anti, s.hi) - Horner(anti, s.lo);
    }
    segments_.push_back(s);
    seg_starts_.push_back(s.lo);
  }

  mean_ = 0.0;
  for (const Atom& a : atoms_) mean_ += a.x * a.p;
  for (const DensityPiece& p : pieces_) {
    for (size_t k = 0; k < p.coeffs.size(); ++k) {
      const double e = static_cast<double>(k + 2);
      mean_ += p.coeffs[k] * (std::pow(p.hi, e) - std::pow(p.lo, e)) / e;
    }
  }

  fingerprint_ = "A";
  for (const Atom& a : atoms_) fingerprint_ += ":" + Num(a.x) + "@" + Num(a.p);
  fingerprint_ += "|P";
  for (const DensityPiece& p : pieces_) {
    fingerprint_ += ":" + Num(p.lo) + "," + Num(p.hi) + "[";
    for (double c : p.coeffs) fingerprint_ += Num(c) + ";";
    fingerprint_ += "]";
  }
}

bool Distribution::is_standard_uniform() const {
  return atoms_.empty() && pieces_.size() == 1 && pieces_[0].lo == 0.0 &&
         pieces_[0].hi == 1.0 && pieces_[0].coeffs.size() == 1 &&
         pieces_[0].coeffs[0] == 1.0;
}

int Distribution::segment_index(double x) const {
  auto it = std::upper_bound(seg_starts_.begin(), seg_starts_.end(), x);
  int s = static_cast<int>(it - seg_starts_.begin()) - 1;
  return std::clamp(s, 0, static_cast<int>(segments_.size()) - 1);
}

double Distribution::segment_cdf(int s, double x) const {
  const Segment& seg = segments_[s];
  double f = seg.f_lo;
  if (seg.piece >= 0) {
    const auto& anti = antideriv_[seg.piece];
    f += Horner(anti, x) - Horner(anti, seg.lo);
  }
  return std::clamp(f, 0.0, 1.0);
}

double Distribution::cdf(double x) const {
  if (x < 0.0) return 0.0;
  if (x >= 1.0) return 1.0;
  return segment_cdf(segment_index(x), x);
}

double Distribution::cdf_left(double x) const {
  double f = cdf(x);
  auto it = std::lower_bound(atoms_.begin(), atoms_.end(), x,
                             [](const Atom& a, double v) { return a.x < v; });
  if (it != atoms_.end() && it->x == x) f -= it->p;
  return std::max(f, 0.0);
}

double Distribution::density(double x) const {
  for (const DensityPiece& p : pieces_) {
    if (p.lo <= x && (x < p.hi || (x == p.hi && p.hi == 1.0))) {
      return Horner(p.coeffs, x);
    }
  }
  return 0.0;
}

double Distribution::mean() const { return mean_; }

double Distribution::integrate_cdf_power(double lo, double hi, int n) const {
  lo = std::max(lo, 0.0);
  hi = std::min(hi, 1.0);
  if (!(lo < hi)) return 0.0;
  if (n == 0) return hi - lo;
  double total = 0.0;
  for (int s = segment_index(lo); s < static_cast<int>(segments_.size()); ++s) {
    const Segment& seg = segments_[s];
    if (seg.lo >= hi) break;
    const double a = std::max(lo, seg.lo), b = std::min(hi, seg.hi);
    if (!(a < b)) continue;
    if (seg.piece < 0) {
      total += std::pow(seg.f_lo, n) * (b - a);
    } else {
      const int deg = n * static_cast<int>(pieces_[seg.piece].coeffs.size());
      total += GaussIntegrate(
          [&](double x) { return std::pow(segment_cdf(s, x), n); }, a, b,
          GaussNodesFor(deg));
    }
  }
  return total;
}

double Distribution::expect_max_with(double k) const {
  return expect_order_max_with(1, k);
}

double Distribution::expect_order_max_with(int n, double k) const {
  if (n < 0) Fail(ErrorCode::kArgument, "expect_order_max_with: n < 0");
  if (k >= 1.0) return k;
  if (n == 0) return k;
  if (k < 0.0) k = 0.0;
  return 1.0 - integrate_cdf_power(k, 1.0, n);
}

double Distribution::top_two_expectation(int n) const {
  if (n < 2) Fail(ErrorCode::kArgument, "top_two_expectation: n must be >= 2");
  const double in = integrate_cdf_power(0.0, 1.0, n);
  const double in1 = integrate_cdf_power(0.0, 1.0, n - 1);
  return 2.0 + (n - 2.0) * in - n * in1;
}

double Distribution::partial_expectation(
    double lo, double hi, const std::function<double(double)>& g,
    bool include_lower, double tol) const {
  if (lo > hi) Fail(ErrorCode::kArgument, "partial_expectation: lo > hi");
  double total = 0.0;
  for (const Atom& a : atoms_) {
    const bool at_lo = include_lower && a.x == lo;
    if ((a.x > lo && a.x <= hi) || at_lo) {
      const double v = g(a.x);
      if (!std::isfinite(v)) {
        Fail(ErrorCode::kIntegration, "non-finite integrand at atom " + Num(a.x));
      }
      total += v * a.p;
    }
  }
  int overlapping = 0;
  for (const DensityPiece& p : pieces_) {
    if (std::max(lo, p.lo) < std::min(hi, p.hi)) ++overlapping;
  }
  for (const DensityPiece& p : pieces_) {
    const double a = std::max(lo, p.lo), b = std::min(hi, p.hi);
    if (!(a < b)) continue;
    total += AdaptiveSimpson(
        [&](double x) { return g(x) * Horner(p.coeffs, x); }, a, b,
        tol / overlapping);
  }
  return total;
}

double Distribution::quantile(double u) const {
  if (u <= 0.0) return segments_.empty() ? 0.0 : segments_.front().lo;
  double prev_end = 0.0;  // F just below the current segment
  for (int s = 0; s < static_cast<int>(segments_.size()); ++s) {
    const Segment& seg = segments_[s];
    if (seg.f_lo > prev_end && u <= seg.f_lo) return seg.lo;
    prev_end = seg.f_lo;
    if (seg.piece < 0) continue;
    const double f_hi = segment_cdf(s, seg.hi);
    if (u > f_hi) {
      prev_end = f_hi;
      continue;
    }
    // Safeguarded Newton on F(x) = u inside (lo, hi).
    double a = seg.lo, b = seg.hi;
    double x = a + (b - a) * (u - seg.f_lo) / std::max(f_hi - seg.f_lo, 1e-300);
    const auto& coeffs = pieces_[seg.piece].coeffs;
    for (int it = 0; it < 100; ++it) {
      const double fx = segment_cdf(s, x) - u;
      if (fx > 0.0) b = x; else a = x;
      if (std::abs(fx) < 1e-15 || b - a < 1e-15) break;
      const double dens = Horner(coeffs, x);
      double next = dens > 0.0 ? x - fx / dens : 0.5 * (a + b);
      if (!(next > a && next < b)) next = 0.5 * (a + b);
      x = next;
    }
    return x;
  }
  return 1.0;
}

OrderMaxCurve::OrderMaxCurve(const Distribution& d, int n)
    : d_(d), n_(n), nodes_(GaussNodesFor(n * std::max(d.cdf_degree(), 1))) {
  const auto& segs = d_.segments();
  suffix_.assign(segs.size() + 1, 0.0);
  for (int s = static_cast<int>(segs.size()) - 1; s >= 0; --s) {
    suffix_[s] = suffix_[s + 1] + SegmentTail(s, segs[s].lo);
  }
}

double OrderMaxCurve::SegmentTail(int s, double from) const {
  const auto& seg = d_.segments()[s];
  if (!(from < seg.hi)) return 0.0;
  if (n_ == 0) return seg.hi - from;
  if (seg.piece < 0) return std::pow(seg.f_lo, n_) * (seg.hi - from);
  return GaussIntegrate(
      [&](double x) { return std::pow(d_.segment_cdf(s, x), n_); }, from,
      seg.hi, nodes_);
}

double OrderMaxCurve::operator()(double b) const {
  if (b >= 1.0) return b;
  if (n_ == 0) return b;
  if (b < 0.0) b = 0.0;
  const int s = d_.segment_index(b);
  return 1.0 - (SegmentTail(s, b) + suffix_[s + 1]);
}

}  // namespace selgame
