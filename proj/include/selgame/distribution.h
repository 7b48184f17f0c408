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

#ifndef SELGAME_DISTRIBUTION_H_
#define SELGAME_DISTRIBUTION_H_

#include <cstdint>
#include <functional>
#include <string>
#include <vector>

namespace selgame {

struct Atom {
  double x = 0.0;
  double p = 0.0;
  // Optional exact spelling ("1/3", "0.1") kept for rational consumers.
  std::string exact_x;
  std::string exact_p;
};

// Density c0 + c1 x + c2 x^2 + ... on [lo, hi].
struct DensityPiece {
  double lo = 0.0;
  double hi = 1.0;
  std::vector<double> coeffs;
};

// A law on [0, 1]: finitely many atoms plus a piecewise polynomial density.
//
// Integrals over [lo, hi] count atoms in (lo, hi] unless asked otherwise.
class Distribution {
 public:
  static Distribution Uniform();
  static Distribution PointMass(double v);
  static Distribution Discrete(std::vector<Atom> atoms);
  static Distribution Make(std::vector<Atom> atoms,
                           std::vector<DensityPiece> pieces);
  // eta * Uniform[0,1] + (1 - eta) * discrete.
  static Distribution Mixture(double eta, const Distribution& discrete);

  const std::vector<Atom>& atoms() const { return atoms_; }
  const std::vector<DensityPiece>& pieces() const { return pieces_; }
  bool is_continuous() const { return atoms_.empty(); }
  bool is_discrete() const { return pieces_.empty(); }
  bool is_standard_uniform() const;
  // Largest polynomial degree of the cdf on a density piece.
  int cdf_degree() const { return cdf_degree_; }

  double cdf(double x) const;
  // P(X < x).
  double cdf_left(double x) const;
  double density(double x) const;
  double mean() const;

  // E(X v k).
  double expect_max_with(double k) const;
  // E(max(X_1..X_n) v k).
  double expect_order_max_with(int n, double k) const;
  // E of the sum of the two largest of n draws.
  double top_two_expectation(int n) const;
  // Integral of F(x)^n over [lo, hi] in dx.
  double integrate_cdf_power(double lo, double hi, int n) const;

  // Integral of g dF over (lo, hi]. With include_lower an atom sitting
  // exactly at lo is counted as well.
  double partial_expectation(double lo, double hi,
                             const std::function<double(double)>& g,
                             bool include_lower = false,
                             double tol = 1e-10) const;

  // Inverse cdf: smallest x with F(x) >= u.
  double quantile(double u) const;

  // Canonical text used as a cache key.
  const std::string& fingerprint() const { return fingerprint_; }

  // Segments between consecutive support breakpoints; F is a polynomial in
  // the interior of each one.
  struct Segment {
    double lo = 0.0;
    double hi = 0.0;
    int piece = -1;     // density piece index, -1 if no density
    double f_lo = 0.0;  // F(lo), atom at lo included
  };
  const std::vector<Segment>& segments() const { return segments_; }
  // F on the interior of segment s.
  double segment_cdf(int s, double x) const;
  int segment_index(double x) const;

 private:
  Distribution() = default;
  void Finalize();

  std::vector<Atom> atoms_;
  std::vector<DensityPiece> pieces_;
  std::vector<std::vector<double>> antideriv_;  // per piece, vanishes at lo
  std::vector<Segment> segments_;
  std::vector<double> seg_starts_;
  double mean_ = 0.0;
  int cdf_degree_ = 0;
  std::string fingerprint_;
};

// Precomputed x -> E(max(X_1..X_n) v x) for one n. Evaluation is exact up to
// rounding for polynomial densities.
class OrderMaxCurve {
 public:
  OrderMaxCurve(const Distribution& d, int n);
  double operator()(double b) const;
  int n() const { return n_; }

 private:
  double SegmentTail(int s, double from) const;

  Distribution d_;
  int n_;
  int nodes_;
  std::vector<double> suffix_;  // integral of F^n over segments s..end
};

}  // namespace selgame

#endif  // SELGAME_DISTRIBUTION_H_
