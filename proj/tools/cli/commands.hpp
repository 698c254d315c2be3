// Copyright 2026 The spinotto Authors
//
// Licensed under the Apache License, Version 2.0 (the "License");
// you may not use this file except in compliance with the License.
// You may obtain a copy of the License at
//
//     http://www.apache.org/licenses/LICENSE-2.0
//
// Unless required by applicable law or agreed to in writing, software
// distributed under the License is distributed on an "AS IS" BASIS,
// WITHOUT WARRANTIES OR CONDITIONS OF ANY KIND, either express or implied.
// See the License for the specific language governing permissions and
// limitations under the License.

#pragma once

#include <optional>
#include <string>
#include <vector>

#include "config.hpp"
#include "csv.hpp"

namespace cli {

/** A fully resolved cycle: g, r and beta_C are concrete numbers. */
struct Point {
  int n = 10;
  double p = 0.0;
  double g = 0.0;
  std::optional<double> g_c;  // absent when the gap curve has no interior maximum
  double omega0 = 1.0;
  spinotto_boundary boundary = SPINOTTO_BOUNDARY_OPEN;
  double r = 1.1;
  double beta_h = 10.0;
  double beta_c = 20.0;
  double tau = 100.0;
  spinotto_mode mode = SPINOTTO_MODE_ADIABATIC;
  spinotto_cd_variant cd_variant = SPINOTTO_CD_FULL;
  int steps = 0;
};

struct Outcome {
  std::optional<spinotto_performance> perf;
  std::optional<double> oracle_w;
  std::optional<double> oracle_eta;
  std::string error;
};

/** g_c(p) at N for the chain geometry, memoized; safe to call from workers. */
double critical_g(int n, double p, double omega0, spinotto_boundary boundary);

Point resolve(const RunConfig& cfg);
Outcome evaluate(const Point& pt, bool oracle);

std::vector<std::string> result_header(bool with_error, bool oracle);
std::vector<std::string> result_row(const Point& pt, const Outcome& out, bool with_error,
                                    bool oracle);
/** Row for a point that failed before it could be resolved. */
std::vector<std::string> unresolved_row(const RunConfig& cfg, const std::string& error,
                                        bool oracle);

std::string mode_name(spinotto_mode m);
std::string p_label(double p);  // "p1", "p2.5", "pinf"

/** Writes to stdout and, when out_dir is set, to out_dir/name. */
void emit(const Table& table, const std::string& out_dir, const std::string& name);
std::string join_path(const std::string& dir, const std::string& name);

int cmd_cycle(const RunConfig& cfg);
int cmd_sweep(const RunConfig& cfg);
int cmd_gc(const RunConfig& cfg);
int cmd_spectrum(const RunConfig& cfg);
int cmd_entanglement(const RunConfig& cfg);
int cmd_cd_coeffs(const RunConfig& cfg);

const std::vector<std::string>& figure_names();
/** Preset defaults for a figure; user entries are applied on top. */
RunConfig figure_defaults(const std::string& name);
int cmd_figure(const std::string& name, const RunConfig& cfg, bool p_given);

}  // namespace cli
