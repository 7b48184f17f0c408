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

// Command-line front end. Talks to the library through the C API only.

#include <cstdio>
#include <fstream>
#include <iostream>
#include <memory>
#include <optional>
#include <sstream>
#include <string>
#include <vector>

#include "CLI11.hpp"
#include "json.hpp"
#include "selgame/c_api.h"

namespace {

using json = nlohmann::ordered_json;

constexpr int kExitOk = 0;
constexpr int kExitInternal = 1;
constexpr int kExitUser = 2;
constexpr int kExitResource = 3;

struct Failure {
  sg_status status;
  std::string message;
};

void Check(sg_status st) {
  if (st != SG_OK) throw Failure{st, sg_last_error()};
}

void Usage(const std::string& message) {
  throw Failure{SG_ERR_ARGUMENT, message};
}

struct DistDeleter {
  void operator()(sg_distribution* d) const { sg_distribution_free(d); }
};
struct StrategyDeleter {
  void operator()(sg_strategy* s) const { sg_strategy_free(s); }
};
using Dist = std::unique_ptr<sg_distribution, DistDeleter>;
using Strat = std::unique_ptr<sg_strategy, StrategyDeleter>;

std::string TakeString(char* s) {
  std::string out = s ? s : "";
  sg_string_free(s);
  return out;
}

std::string ReadFile(const std::string& path) {
  std::ifstream in(path, std::ios::binary);
  if (!in) Usage("cannot read '" + path + "'");
  std::ostringstream ss;
  ss << in.rdbuf();
  return ss.str();
}

bool LooksInline(const std::string& s) {
  const auto pos = s.find_first_not_of(" \t\r\n");
  return pos != std::string::npos && (s[pos] == '{' || s[pos] == '[');
}

Dist LoadDist(const std::string& spec) {
  std::string text = spec;
  if (spec != "uniform" && !LooksInline(spec)) text = ReadFile(spec);
  sg_distribution* d = nullptr;
  Check(sg_distribution_from_text(text.c_str(), &d));
  return Dist(d);
}

sg_variant ParseVariant(const std::string& v) {
  if (v == "fullrecall") return SG_FULL_RECALL;
  if (v == "norecall") return SG_NO_RECALL;
  Usage("variant must be fullrecall or norecall");
  return SG_NO_RECALL;
}

struct Options {
  std::string dist = "uniform";
  std::optional<int> n;
  std::string out;
  std::string format = "csv";
  int grid = 0;
  double quad_tol = 0.0;
  uint64_t seed = 20260101;
  std::string variant = "norecall";
  bool closed_form = false;
  bool two_arrival = false;
  std::string strategy = "best";
  int64_t runs = 100000;
  bool gap = false;
  int diagonal_points = 201;
  std::string which;
};

sg_grid Grid(const Options& o) {
  sg_grid g = sg_default_grid();
  if (o.grid > 0) g.points = o.grid;
  if (o.quad_tol > 0.0) g.quad_tol = o.quad_tol;
  return g;
}

int RequireN(const Options& o, int fallback) {
  const int n = o.n.value_or(fallback);
  if (n < 1) Usage("--n must be at least 1");
  return n;
}

// Columnar output shared by every subcommand.
struct Table {
  std::vector<std::string> columns;
  std::vector<std::vector<json>> rows;
};

std::string FormatCell(const json& v) {
  if (v.is_string()) return v.get<std::string>();
  if (v.is_number_integer()) return std::to_string(v.get<int64_t>());
  if (v.is_number_unsigned()) return std::to_string(v.get<uint64_t>());
  if (v.is_boolean()) return v.get<bool>() ? "true" : "false";
  char buf[64];
  std::snprintf(buf, sizeof buf, "%.10g", v.get<double>());
  return buf;
}

std::string Render(const Table& t, const std::string& format) {
  if (format == "json") {
    json arr = json::array();
    for (const auto& row : t.rows) {
      json obj = json::object();
      for (size_t i = 0; i < t.columns.size(); ++i) obj[t.columns[i]] = row[i];
      arr.push_back(obj);
    }
    return arr.dump(2) + "\n";
  }
  std::string s;
  for (size_t i = 0; i < t.columns.size(); ++i) {
    s += (i ? "," : "") + t.columns[i];
  }
  s += "\n";
  for (const auto& row : t.rows) {
    for (size_t i = 0; i < row.size(); ++i) s += (i ? "," : "") + FormatCell(row[i]);
    s += "\n";
  }
  return s;
}

void Emit(const Options& o, const std::string& text) {
  if (o.out.empty()) {
    std::fwrite(text.data(), 1, text.size(), stdout);
    return;
  }
  std::ofstream f(o.out, std::ios::binary);
  if (!f) Usage("cannot write '" + o.out + "'");
  f << text;
}

std::vector<sg_norecall_row> NoRecallRows(const sg_distribution* d, int n, bool closed) {
  std::vector<sg_norecall_row> rows(n);
  Check(sg_norecall_series(d, n, closed ? 1 : 0, rows.data()));
  return rows;
}

sg_ratio_report RatiosAt(const sg_distribution* d, int n, sg_variant v, sg_grid g) {
  sg_ratio_report r{};
  Check(sg_ratios(d, n, v, g, &r));
  return r;
}

std::string RunProphet(const Options& o) {
  const int n = RequireN(o, 5);
  Dist d = LoadDist(o.dist);
  std::vector<double> c(n + 1), s(n + 1);
  Check(sg_prophet_values(d.get(), n, c.data()));
  Check(sg_max_feasible_sum(d.get(), n, s.data()));
  Table t{{"n", "c", "s", "top_two"}, {}};
  for (int k = 1; k <= n; ++k) {
    // One arrival has no runner-up; the pair total is that arrival alone.
    double top = 0.0;
    if (k == 1) {
      Check(sg_distribution_mean(d.get(), &top));
    } else {
      Check(sg_top_two(d.get(), k, &top));
    }
    t.rows.push_back({k, c[k], s[k], top});
  }
  return Render(t, o.format);
}

std::string RunFullRecall(const Options& o) {
  const int n = RequireN(o, 3);
  Dist d = LoadDist(o.dist);
  Table t{{"n", "l", "h"}, {}};
  for (int k = 1; k <= n; ++k) {
    double l = 0.0, h = 0.0;
    Check(sg_fullrecall_band(d.get(), k, Grid(o), &l, &h));
    t.rows.push_back({k, l, h});
  }
  return Render(t, o.format);
}

std::string RunNoRecall(const Options& o) {
  const int n = RequireN(o, 4);
  Dist d = LoadDist(o.dist);
  Table t{{"n", "alpha_prime", "alpha", "beta"}, {}};
  for (const auto& r : NoRecallRows(d.get(), n, o.closed_form)) {
    t.rows.push_back({r.n, r.alpha_prime, r.alpha, r.beta});
  }
  return Render(t, o.format);
}

std::string RunOracle(const Options& o) {
  const int n = RequireN(o, 2);
  Dist d = LoadDist(o.dist);
  char* raw = nullptr;
  Check(sg_oracle_json(d.get(), n, ParseVariant(o.variant), &raw));
  const json set = json::parse(TakeString(raw));
  if (o.format == "json") return set.dump(2) + "\n";
  Table t{{"x", "y"}, {}};
  auto frac = [](const json& r) {
    return r.at("num").get<std::string>() + "/" + r.at("den").get<std::string>();
  };
  for (const auto& p : set.at("payoffs")) {
    t.rows.push_back({frac(p.at("x")), frac(p.at("y"))});
  }
  return Render(t, o.format);
}

std::string RunEfficiency(const Options& o) {
  Dist d = LoadDist(o.dist);
  if (o.two_arrival) {
    double pos2 = 0.0, poa2 = 0.0;
    Check(sg_two_arrival(d.get(), &pos2, &poa2));
    return Render(Table{{"pos2", "poa2"}, {{pos2, poa2}}}, o.format);
  }
  const int n = RequireN(o, 5);
  if (n < 2) Usage("ratios start at n = 2");
  const sg_variant v = ParseVariant(o.variant);
  Table t{{"n", "poa", "pos", "pr"}, {}};
  for (int k = 2; k <= n; ++k) {
    const auto r = RatiosAt(d.get(), k, v, Grid(o));
    t.rows.push_back({k, r.poa, r.pos, r.pr});
  }
  return Render(t, o.format);
}

// --strategy best|worst or a JSON file such as {"kind": "thresholds",
// "thresholds": [0.5, 0.6]} or {"kind": "always"}.
Strat MakeStrategy(const Options& o, const sg_distribution* d, int n, sg_variant v) {
  sg_strategy* s = nullptr;
  if (o.strategy == "best" || o.strategy == "worst") {
    Check(sg_strategy_spe(d, n, v, o.strategy == "best" ? SG_BEST : SG_WORST,
                          Grid(o), &s));
    return Strat(s);
  }
  const std::string text = LooksInline(o.strategy) ? o.strategy : ReadFile(o.strategy);
  json spec;
  try {
    spec = json::parse(text);
  } catch (const json::exception& e) {
    throw Failure{SG_ERR_VALIDATION, std::string("strategy: ") + e.what()};
  }
  if (!spec.is_object() || !spec.contains("kind") || !spec["kind"].is_string()) {
    throw Failure{SG_ERR_VALIDATION, "strategy.kind: missing or not a string"};
  }
  const std::string kind = spec["kind"];
  if (kind == "thresholds") {
    if (!spec.contains("thresholds") || !spec["thresholds"].is_array()) {
      throw Failure{SG_ERR_VALIDATION, "strategy.thresholds: expected an array"};
    }
    std::vector<double> th;
    for (const auto& x : spec["thresholds"]) {
      if (!x.is_number()) {
        throw Failure{SG_ERR_VALIDATION, "strategy.thresholds: expected numbers"};
      }
      th.push_back(x.get<double>());
    }
    Check(sg_strategy_thresholds(th.data(), static_cast<int>(th.size()), &s));
  } else {
    Check(sg_strategy_simple(kind.c_str(), &s));
  }
  return Strat(s);
}

std::string RunSimulate(const Options& o) {
  const int n = RequireN(o, 3);
  Dist d = LoadDist(o.dist);
  const sg_variant v = ParseVariant(o.variant);
  Strat s = MakeStrategy(o, d.get(), n, v);
  sg_sim_report r{};
  Check(sg_simulate(d.get(), n, v, s.get(), s.get(), o.runs, o.seed, &r));
  std::optional<sg_gap_report> gap;
  if (o.gap) {
    sg_gap_report g{};
    Check(sg_best_response_gap(d.get(), n, v, s.get(), Grid(o), o.diagonal_points, &g));
    gap = g;
  }
  const std::string name = TakeString([&] {
    char* raw = nullptr;
    Check(sg_strategy_name(s.get(), &raw));
    return raw;
  }());
  if (o.format == "csv") {
    Table t{{"player", "mean", "std_error"}, {}};
    for (int i = 0; i < 2; ++i) t.rows.push_back({i + 1, r.mean[i], r.std_error[i]});
    if (gap) t.rows.push_back({"gap", gap->gap, 0.0});
    return Render(t, o.format);
  }
  json rep = {{"n", n},
              {"variant", o.variant},
              {"strategy", name},
              {"runs", r.runs},
              {"seed", r.seed},
              {"mean", {r.mean[0], r.mean[1]}},
              {"std_error", {r.std_error[0], r.std_error[1]}}};
  if (gap) {
    rep["gap"] = {{"best_response", {gap->best_response[0], gap->best_response[1]}},
                  {"profile", {gap->profile[0], gap->profile[1]}},
                  {"value", gap->gap}};
  }
  return rep.dump(2) + "\n";
}

std::string RunTables(const Options& o) {
  Dist d = LoadDist(o.dist);
  const sg_grid g = Grid(o);
  const std::string& w = o.which;
  if (w == "table3") {
    const int n = RequireN(o, 4);
    Table t{{"n", "alpha_prime", "alpha", "beta"}, {}};
    for (const auto& r : NoRecallRows(d.get(), n, false)) {
      t.rows.push_back({r.n, r.alpha_prime, r.alpha, r.beta});
    }
    return Render(t, o.format);
  }
  if (w == "table4") {
    const int n = RequireN(o, 5);
    const auto nr = NoRecallRows(d.get(), n, false);
    Table t{{"n", "l", "h", "alpha", "beta"}, {}};
    for (int k = 1; k <= n; ++k) {
      double l = 0.0, h = 0.0;
      Check(sg_fullrecall_band(d.get(), k, g, &l, &h));
      t.rows.push_back({k, l, h, nr[k - 1].alpha, nr[k - 1].beta});
    }
    return Render(t, o.format);
  }
  if (w == "table5") {
    const int n = RequireN(o, 5);
    if (n < 2) Usage("table5 starts at n = 2");
    Table t{{"n", "poa_fr", "poa_nr", "pos_fr", "pos_nr", "pr_fr", "pr_nr"}, {}};
    for (int k = 2; k <= n; ++k) {
      const auto fr = RatiosAt(d.get(), k, SG_FULL_RECALL, g);
      const auto nr = RatiosAt(d.get(), k, SG_NO_RECALL, g);
      t.rows.push_back({k, fr.poa, nr.poa, fr.pos, nr.pos, fr.pr, nr.pr});
    }
    return Render(t, o.format);
  }
  if (w == "fig2" || w == "fig3a" || w == "fig3b" || w == "fig3c") {
    const int n = RequireN(o, 10);
    if (n > 20) Usage("figure series are limited to n <= 20");
    const auto nr = NoRecallRows(d.get(), n, false);
    if (w == "fig2") {
      Table t{{"n", "two_beta", "two_alpha"}, {}};
      for (const auto& r : nr) t.rows.push_back({r.n, 2.0 * r.beta, 2.0 * r.alpha});
      return Render(t, o.format);
    }
    const char* col = w == "fig3a" ? "poa" : w == "fig3b" ? "pos" : "pr";
    Table t{{"n", col}, {}};
    for (int k = 2; k <= n; ++k) {
      const auto r = RatiosAt(d.get(), k, SG_NO_RECALL, g);
      t.rows.push_back({k, w == "fig3a" ? r.poa : w == "fig3b" ? r.pos : r.pr});
    }
    return Render(t, o.format);
  }
  Usage("--which must be one of table3, table4, table5, fig2, fig3a, fig3b, fig3c");
  return {};
}

int ExitFor(sg_status st) {
  switch (st) {
    case SG_OK: return kExitOk;
    case SG_ERR_RESOURCE: return kExitResource;
    case SG_ERR_INTERNAL: return kExitInternal;
    default: return kExitUser;
  }
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"Two-player competitive selection games: equilibrium values and efficiency"};
  app.require_subcommand(1);
  Options o;

  auto common = [&o](CLI::App* sub) {
    sub->add_option("--dist", o.dist, "uniform, inline JSON, or a JSON file path");
    sub->add_option("--n", o.n, "number of arrivals");
    sub->add_option("--out", o.out, "write to this file instead of stdout");
    sub->add_option("--format", o.format)->check(CLI::IsMember({"csv", "json"}));
    sub->add_option("--grid", o.grid, "full-recall grid points per axis")
        ->check(CLI::PositiveNumber);
    sub->add_option("--quad-tol", o.quad_tol, "quadrature tolerance")
        ->check(CLI::PositiveNumber);
    sub->add_option("--seed", o.seed, "random seed");
  };
  auto variant = [&o](CLI::App* sub) {
    sub->add_option("--variant", o.variant)->check(CLI::IsMember({"fullrecall", "norecall"}));
  };

  auto* prophet = app.add_subcommand("prophet", "lone-player values and feasible sums");
  common(prophet);
  auto* fullrecall = app.add_subcommand("fullrecall", "full-recall symmetric band (l, h)");
  common(fullrecall);
  auto* norecall = app.add_subcommand("norecall", "no-recall summaries");
  common(norecall);
  norecall->add_flag("--closed-form", o.closed_form, "uniform closed recursions");
  auto* oracle = app.add_subcommand("oracle", "exact equilibrium payoff set for discrete laws");
  common(oracle);
  variant(oracle);
  auto* efficiency = app.add_subcommand("efficiency", "PoA, PoS and prophet ratio");
  common(efficiency);
  variant(efficiency);
  efficiency->add_flag("--two-arrival", o.two_arrival, "closed forms for two arrivals");
  auto* simulate = app.add_subcommand("simulate", "Monte Carlo play of a symmetric profile");
  common(simulate);
  variant(simulate);
  simulate->add_option("--strategy", o.strategy, "best, worst, or a strategy JSON file");
  simulate->add_option("--runs", o.runs)->check(CLI::PositiveNumber);
  simulate->add_flag("--gap", o.gap, "also compute the best-response gap");
  simulate->add_option("--diagonal-points", o.diagonal_points)->check(CLI::PositiveNumber);
  auto* tables = app.add_subcommand("tables", "reproduce tables and figure series");
  common(tables);
  tables->add_option("--which", o.which)->required();

  try {
    app.parse(argc, argv);
  } catch (const CLI::ParseError& e) {
    const int rc = app.exit(e);
    return rc == 0 ? kExitOk : kExitUser;
  }

  try {
    std::string text;
    if (*prophet) text = RunProphet(o);
    else if (*fullrecall) text = RunFullRecall(o);
    else if (*norecall) text = RunNoRecall(o);
    else if (*oracle) text = RunOracle(o);
    else if (*efficiency) text = RunEfficiency(o);
    else if (*simulate) text = RunSimulate(o);
    else text = RunTables(o);
    Emit(o, text);
  } catch (const Failure& f) {
    std::cerr << "error (" << sg_status_name(f.status) << "): " << f.message << "\n";
    return ExitFor(f.status);
  } catch (const std::exception& e) {
    std::cerr << "error: " << e.what() << "\n";
    return kExitInternal;
  }
  return kExitOk;
}
