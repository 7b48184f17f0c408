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

#include "selgame/c_api.h"

#include <cstdlib>
#include <cstring>
#include <exception>
#include <new>
#include <string>

#include "json.hpp"
#include "selgame/distribution_json.h"
#include "selgame/efficiency.h"
#include "selgame/errors.h"
#include "selgame/full_recall.h"
#include "selgame/no_recall.h"
#include "selgame/oracle.h"
#include "selgame/prophet.h"
#include "selgame/simulate.h"

struct sg_distribution {
  selgame::Distribution d;
};

struct sg_strategy {
  selgame::Strategy s;
};

namespace {

thread_local std::string last_error;

sg_status FromCode(selgame::ErrorCode code) {
  using selgame::ErrorCode;
  switch (code) {
    case ErrorCode::kValidation: return SG_ERR_VALIDATION;
    case ErrorCode::kArgument: return SG_ERR_ARGUMENT;
    case ErrorCode::kUnsupported: return SG_ERR_UNSUPPORTED;
    case ErrorCode::kResource: return SG_ERR_RESOURCE;
    case ErrorCode::kDegenerate: return SG_ERR_DEGENERATE;
    case ErrorCode::kInconsistent: return SG_ERR_INCONSISTENT;
    case ErrorCode::kIntegration: return SG_ERR_INTEGRATION;
  }
  return SG_ERR_INTERNAL;
}

template <typename F>
sg_status Guard(F&& f) {
  last_error.clear();
  try {
    f();
    return SG_OK;
  } catch (const selgame::Error& e) {
    last_error = e.what();
    return FromCode(e.code());
  } catch (const nlohmann::json::exception& e) {
    last_error = e.what();
    return SG_ERR_VALIDATION;
  } catch (const std::bad_alloc&) {
    last_error = "out of memory";
    return SG_ERR_RESOURCE;
  } catch (const std::exception& e) {
    last_error = e.what();
    return SG_ERR_INTERNAL;
  }
}

template <typename... P>
void NonNull(const P*... ptrs) {
  if (((ptrs == nullptr) || ...)) {
    selgame::Fail(selgame::ErrorCode::kArgument, "null pointer argument");
  }
}

selgame::GridConfig Grid(sg_grid g) { return selgame::GridConfig{g.points, g.quad_tol}; }

selgame::Variant ToVariant(sg_variant v) {
  if (v != SG_FULL_RECALL && v != SG_NO_RECALL) {
    selgame::Fail(selgame::ErrorCode::kArgument, "unknown variant");
  }
  return v == SG_FULL_RECALL ? selgame::Variant::kFullRecall
                             : selgame::Variant::kNoRecall;
}

char* CopyString(const std::string& s) {
  char* out = static_cast<char*>(std::malloc(s.size() + 1));
  if (!out) throw std::bad_alloc();
  std::memcpy(out, s.c_str(), s.size() + 1);
  return out;
}

}  // namespace

extern "C" {

const char* sg_last_error(void) { return last_error.c_str(); }

const char* sg_status_name(sg_status status) {
  switch (status) {
    case SG_OK: return "ok";
    case SG_ERR_VALIDATION: return "validation";
    case SG_ERR_ARGUMENT: return "argument";
    case SG_ERR_UNSUPPORTED: return "unsupported";
    case SG_ERR_RESOURCE: return "resource";
    case SG_ERR_DEGENERATE: return "degenerate";
    case SG_ERR_INCONSISTENT: return "inconsistent";
    case SG_ERR_INTEGRATION: return "integration";
    case SG_ERR_INTERNAL: return "internal";
  }
  return "unknown";
}

sg_grid sg_default_grid(void) {
  const selgame::GridConfig g;
  return sg_grid{g.points, g.quad_tol};
}

void sg_string_free(char* s) { std::free(s); }

sg_status sg_distribution_from_text(const char* spec, sg_distribution** out) {
  return Guard([&] {
    NonNull(spec, out);
    *out = new sg_distribution{selgame::DistributionFromText(spec)};
  });
}

sg_status sg_tightness_family(double epsilon, double eta, sg_distribution** out) {
  return Guard([&] {
    NonNull(out);
    *out = new sg_distribution{selgame::TightnessFamily(epsilon, eta)};
  });
}

void sg_distribution_free(sg_distribution* d) { delete d; }

sg_status sg_distribution_json(const sg_distribution* d, char** out) {
  return Guard([&] {
    NonNull(d, out);
    *out = CopyString(selgame::DistributionToJson(d->d).dump());
  });
}

sg_status sg_distribution_mean(const sg_distribution* d, double* out) {
  return Guard([&] {
    NonNull(d, out);
    *out = d->d.mean();
  });
}

sg_status sg_prophet_values(const sg_distribution* d, int n, double* out) {
  return Guard([&] {
    NonNull(d, out);
    if (n < 0) selgame::Fail(selgame::ErrorCode::kArgument, "n must be >= 0");
    const auto c = selgame::ProphetValues(d->d, n);
    for (int k = 0; k <= n; ++k) out[k] = c[k];
  });
}

sg_status sg_max_feasible_sum(const sg_distribution* d, int n, double* out) {
  return Guard([&] {
    NonNull(d, out);
    if (n < 0) selgame::Fail(selgame::ErrorCode::kArgument, "n must be >= 0");
    const auto s = selgame::MaxFeasibleSum(d->d, n);
    for (int k = 0; k <= n; ++k) out[k] = s[k];
  });
}

sg_status sg_top_two(const sg_distribution* d, int n, double* out) {
  return Guard([&] {
    NonNull(d, out);
    *out = d->d.top_two_expectation(n);
  });
}

sg_status sg_fullrecall_lh(const sg_distribution* d, int n, double a, double b,
                           sg_grid grid, double* l, double* h) {
  return Guard([&] {
    NonNull(d, l, h);
    const selgame::Pair v = selgame::LhValues(d->d, n, a, b, Grid(grid));
    *l = v[0];
    *h = v[1];
  });
}

sg_status sg_fullrecall_band(const sg_distribution* d, int n, sg_grid grid,
                             double* l, double* h) {
  return Guard([&] {
    NonNull(d, l, h);
    const selgame::FullRecallBand band = selgame::Band(d->d, n, Grid(grid));
    *l = band.l;
    *h = band.h;
  });
}

sg_status sg_uniform_closed_forms(int n, double a, double b, double* l, double* h) {
  return Guard([&] {
    NonNull(l, h);
    const selgame::Pair v = selgame::UniformClosedForms(n, a, b);
    *l = v[0];
    *h = v[1];
  });
}

sg_status sg_uniform_best_threshold(double* out) {
  return Guard([&] {
    NonNull(out);
    *out = selgame::UniformBestThreshold();
  });
}

sg_status sg_norecall_series(const sg_distribution* d, int n, int closed_form,
                             sg_norecall_row* rows) {
  return Guard([&] {
    NonNull(d, rows);
    std::vector<selgame::NoRecallSummary> series;
    if (closed_form) {
      if (!d->d.is_standard_uniform()) {
        selgame::Fail(selgame::ErrorCode::kUnsupported,
                      "closed recursions exist for the uniform law only");
      }
      series = selgame::UniformNoRecallSeries(n);
    } else {
      series = selgame::NoRecallSeries(d->d, n);
    }
    for (int k = 0; k < n; ++k) {
      const auto& s = series[k];
      rows[k] = sg_norecall_row{s.n, s.alpha_prime, s.alpha, s.beta, s.c()};
    }
  });
}

sg_status sg_best_single_two(const sg_distribution* d, double* out) {
  return Guard([&] {
    NonNull(d, out);
    *out = selgame::BestSingleTwoArrivals(d->d);
  });
}

sg_status sg_oracle_json(const sg_distribution* d, int n, sg_variant variant,
                         char** out) {
  return Guard([&] {
    NonNull(d, out);
    const auto set = selgame::OracleSpep(d->d, n, ToVariant(variant));
    *out = CopyString(selgame::OracleJson(set).dump());
  });
}

sg_status sg_ratios(const sg_distribution* d, int n, sg_variant variant,
                    sg_grid grid, sg_ratio_report* out) {
  return Guard([&] {
    NonNull(d, out);
    const auto r = selgame::Ratios(d->d, n, ToVariant(variant), Grid(grid));
    *out = sg_ratio_report{r.n, r.poa, r.pos, r.pr, r.max_sum,
                           r.top_two, r.worst_sum, r.best_sum};
  });
}

sg_status sg_two_arrival(const sg_distribution* d, double* pos2, double* poa2) {
  return Guard([&] {
    NonNull(d, pos2, poa2);
    const auto f = selgame::TwoArrivalClosedForms(d->d);
    *pos2 = f.pos2;
    *poa2 = f.poa2;
  });
}

sg_status sg_strategy_spe(const sg_distribution* d, int n, sg_variant variant,
                          sg_which which, sg_grid grid, sg_strategy** out) {
  return Guard([&] {
    NonNull(d, out);
    const selgame::Which w =
        which == SG_WORST ? selgame::Which::kWorst : selgame::Which::kBest;
    *out = new sg_strategy{
        selgame::SpeStrategy(d->d, n, ToVariant(variant), w, Grid(grid))};
  });
}

sg_status sg_strategy_simple(const char* kind, sg_strategy** out) {
  return Guard([&] {
    NonNull(kind, out);
    const std::string k = kind;
    if (k == "always") {
      *out = new sg_strategy{selgame::AlwaysBid{}};
    } else if (k == "never") {
      *out = new sg_strategy{selgame::NeverBid{}};
    } else if (k == "prophet") {
      *out = new sg_strategy{selgame::ProphetThreshold{}};
    } else {
      selgame::Fail(selgame::ErrorCode::kValidation,
                    "strategy kind '" + k + "' is not always, never or prophet");
    }
  });
}

sg_status sg_strategy_thresholds(const double* thresholds, int count,
                                 sg_strategy** out) {
  return Guard([&] {
    NonNull(out);
    if (count < 0 || (count > 0 && thresholds == nullptr)) {
      selgame::Fail(selgame::ErrorCode::kArgument, "bad threshold array");
    }
    selgame::ThresholdStrategy t;
    t.thresholds.assign(thresholds, thresholds + count);
    *out = new sg_strategy{std::move(t)};
  });
}

void sg_strategy_free(sg_strategy* s) { delete s; }

sg_status sg_strategy_name(const sg_strategy* s, char** out) {
  return Guard([&] {
    NonNull(s, out);
    *out = CopyString(selgame::StrategyName(s->s));
  });
}

sg_status sg_strategy_threshold_at(const sg_strategy* s, int k, double b,
                                   double* out) {
  return Guard([&] {
    NonNull(s, out);
    const auto* f = std::get_if<selgame::FullRecallSpe>(&s->s);
    if (!f) {
      selgame::Fail(selgame::ErrorCode::kUnsupported,
                    "thresholds are defined for full-recall equilibrium strategies");
    }
    if (k < 0 || k >= f->policy->n()) {
      selgame::Fail(selgame::ErrorCode::kArgument, "k out of range");
    }
    *out = f->policy->Threshold(k, b);
  });
}

sg_status sg_simulate(const sg_distribution* d, int n, sg_variant variant,
                      const sg_strategy* s1, const sg_strategy* s2,
                      int64_t runs, uint64_t seed, sg_sim_report* out) {
  return Guard([&] {
    NonNull(d, s1, s2, out);
    const auto r = selgame::Play(d->d, n, ToVariant(variant), s1->s, s2->s,
                                 selgame::SimulationConfig{runs, seed});
    *out = sg_sim_report{r.runs, r.seed, {r.mean[0], r.mean[1]},
                         {r.stderr_[0], r.stderr_[1]}};
  });
}

sg_status sg_best_response_gap(const sg_distribution* d, int n,
                               sg_variant variant, const sg_strategy* fixed,
                               sg_grid grid, int diagonal_points,
                               sg_gap_report* out) {
  return Guard([&] {
    NonNull(d, fixed, out);
    selgame::GapConfig cfg;
    cfg.grid = Grid(grid);
    cfg.diagonal_points = diagonal_points;
    const auto g = selgame::BestResponseGap(d->d, n, ToVariant(variant), fixed->s, cfg);
    *out = sg_gap_report{{g.best_response[0], g.best_response[1]},
                         {g.profile[0], g.profile[1]},
                         g.gap};
  });
}

}  // extern "C"
