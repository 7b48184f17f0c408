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

#ifndef SELGAME_C_API_H_
#define SELGAME_C_API_H_

#include <stdint.h>

#if defined(_WIN32)
#define SG_API __declspec(dllexport)
#else
#define SG_API __attribute__((visibility("default")))
#endif

#ifdef __cplusplus
extern "C" {
#endif

typedef enum {
  SG_OK = 0,
  SG_ERR_VALIDATION = 1,
  SG_ERR_ARGUMENT = 2,
  SG_ERR_UNSUPPORTED = 3,
  SG_ERR_RESOURCE = 4,
  SG_ERR_DEGENERATE = 5,
  SG_ERR_INCONSISTENT = 6,
  SG_ERR_INTEGRATION = 7,
  SG_ERR_INTERNAL = 99
} sg_status;

typedef enum { SG_FULL_RECALL = 0, SG_NO_RECALL = 1 } sg_variant;
typedef enum { SG_BEST = 0, SG_WORST = 1 } sg_which;

typedef struct sg_distribution sg_distribution;
typedef struct sg_strategy sg_strategy;

typedef struct {
  int points;
  double quad_tol;
} sg_grid;

typedef struct {
  int n;
  double alpha_prime;
  double alpha;
  double beta;
  // Lone-player value c_n.
  double c;
} sg_norecall_row;

typedef struct {
  int n;
  double poa;
  double pos;
  double pr;
  double max_sum;
  double top_two;
  double worst_sum;
  double best_sum;
} sg_ratio_report;

typedef struct {
  int64_t runs;
  uint64_t seed;
  double mean[2];
  double std_error[2];
} sg_sim_report;

typedef struct {
  double best_response[2];
  double profile[2];
  double gap;
} sg_gap_report;

// Message of the last failed call on this thread ("" if none).
SG_API const char* sg_last_error(void);
SG_API const char* sg_status_name(sg_status status);
SG_API sg_grid sg_default_grid(void);
// Frees strings returned through char** out-parameters.
SG_API void sg_string_free(char* s);

// "uniform" or a JSON distribution spec.
SG_API sg_status sg_distribution_from_text(const char* spec,
                                           sg_distribution** out);
SG_API sg_status sg_tightness_family(double epsilon, double eta,
                                     sg_distribution** out);
SG_API void sg_distribution_free(sg_distribution* d);
SG_API sg_status sg_distribution_json(const sg_distribution* d, char** out);
SG_API sg_status sg_distribution_mean(const sg_distribution* d, double* out);

// Arrays of length n + 1, index 0 holding 0.
SG_API sg_status sg_prophet_values(const sg_distribution* d, int n,
                                   double* out);
SG_API sg_status sg_max_feasible_sum(const sg_distribution* d, int n,
                                     double* out);
SG_API sg_status sg_top_two(const sg_distribution* d, int n, double* out);

SG_API sg_status sg_fullrecall_lh(const sg_distribution* d, int n, double a,
                                  double b, sg_grid grid, double* l,
                                  double* h);
SG_API sg_status sg_fullrecall_band(const sg_distribution* d, int n,
                                    sg_grid grid, double* l, double* h);
SG_API sg_status sg_uniform_closed_forms(int n, double a, double b, double* l,
                                         double* h);
SG_API sg_status sg_uniform_best_threshold(double* out);

// rows has room for n entries (k = 1..n). closed_form selects the uniform
// closed recursions.
SG_API sg_status sg_norecall_series(const sg_distribution* d, int n,
                                    int closed_form, sg_norecall_row* rows);
SG_API sg_status sg_best_single_two(const sg_distribution* d, double* out);

SG_API sg_status sg_oracle_json(const sg_distribution* d, int n,
                                sg_variant variant, char** out);

SG_API sg_status sg_ratios(const sg_distribution* d, int n,
                           sg_variant variant, sg_grid grid,
                           sg_ratio_report* out);
SG_API sg_status sg_two_arrival(const sg_distribution* d, double* pos2,
                                double* poa2);

SG_API sg_status sg_strategy_spe(const sg_distribution* d, int n,
                                 sg_variant variant, sg_which which,
                                 sg_grid grid, sg_strategy** out);
// kind: "always", "never" or "prophet".
SG_API sg_status sg_strategy_simple(const char* kind, sg_strategy** out);
SG_API sg_status sg_strategy_thresholds(const double* thresholds, int count,
                                        sg_strategy** out);
SG_API void sg_strategy_free(sg_strategy* s);
SG_API sg_status sg_strategy_name(const sg_strategy* s, char** out);
// Full-recall equilibrium strategies only: smallest bidding value with k
// arrivals to come and second-best value b.
SG_API sg_status sg_strategy_threshold_at(const sg_strategy* s, int k,
                                          double b, double* out);

SG_API sg_status sg_simulate(const sg_distribution* d, int n,
                             sg_variant variant, const sg_strategy* s1,
                             const sg_strategy* s2, int64_t runs,
                             uint64_t seed, sg_sim_report* out);
SG_API sg_status sg_best_response_gap(const sg_distribution* d, int n,
                                      sg_variant variant,
                                      const sg_strategy* fixed, sg_grid grid,
                                      int diagonal_points,
                                      sg_gap_report* out);

#ifdef __cplusplus
}
#endif

#endif  // SELGAME_C_API_H_
