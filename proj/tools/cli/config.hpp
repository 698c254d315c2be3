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

#include <limits>
#include <optional>
#include <set>
#include <string>
#include <vector>

#include "spinotto/spinotto.h"

namespace cli {

struct Axis {
  std::string name;  // g, g_over_gc, r, beta_h, beta_c, tau, n, p
  std::vector<double> values;
};

struct RunConfig {
  // [chain]
  int n = 10;
  double p = std::numeric_limits<double>::infinity();
  std::optional<double> g;
  std::optional<double> g_over_gc;
  double omega0 = 1.0;
  spinotto_boundary boundary = SPINOTTO_BOUNDARY_OPEN;
  // [cycle]
  std::optional<double> r;  // unset with r_ni_max selects 1 + 1/(beta_H omega0)
  bool r_ni_max = false;
  double beta_h = 10.0;
  std::optional<double> beta_c;  // unset: 2 beta_H
  double tau = 100.0;
  spinotto_mode mode = SPINOTTO_MODE_ADIABATIC;
  spinotto_cd_variant cd_variant = SPINOTTO_CD_FULL;
  int steps = 0;
  // [sweep]
  std::vector<Axis> axes;
  // [output], [run]
  std::string out_dir;
  bool svg = false;
  bool oracle = false;
  int workers = 1;
  // [gc]
  std::vector<double> powers = {1.0, 2.0, 3.0, std::numeric_limits<double>::infinity()};
  double gc_step = 0.01;
  // [spectrum]
  std::optional<double> spectrum_omega;  // unset: omega0
  int levels = 0;                        // 0: all
  // [entanglement]
  std::vector<double> beta_delta = {0.5, 1.0, 2.0, 5.0};
  double alpha = 1.0;
  // [cd]
  std::optional<double> cd_omega;  // unset: omega0
  double cd_omega_dot = 0.1;
};

struct Entry {
  std::string section;
  std::string key;
  std::string value;
  std::string origin;  // "file:line" or "--set"
};

/** Entries of an INI file in file order; syntax errors carry the line number. */
std::vector<Entry> read_config_file(const std::string& path);

/** "section.key=value" from the command line. */
Entry parse_override(const std::string& text);

/**
 * Applies entries on top of `base`. Sections outside `sections` and unknown
 * keys are rejected with the entry's origin in the message.
 */
RunConfig apply_entries(RunConfig base, const std::vector<Entry>& entries,
                        const std::set<std::string>& sections, const std::string& command);

/** lin lo hi count | log lo hi count | list v1, v2, ... */
std::vector<double> parse_grid(const std::string& text, const std::string& where);

}  // namespace cli
