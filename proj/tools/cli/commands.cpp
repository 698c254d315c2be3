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

#include "commands.hpp"

#include <cmath>
#include <filesystem>
#include <iostream>
#include <map>
#include <mutex>
#include <tuple>

#include "api.hpp"
#include "pool.hpp"

namespace cli {

namespace {

std::string cell(const std::optional<double>& v) { return v ? format_number(*v) : ""; }

double resolved_g(const RunConfig& cfg) {
  if (cfg.g_over_gc)
    return *cfg.g_over_gc * critical_g(cfg.n, cfg.p, cfg.omega0, cfg.boundary);
  return cfg.g.value_or(0.0);
}

void set_axis(RunConfig& c, const std::string& axis, double v) {
  if (axis == "g") {
    c.g = v;
    c.g_over_gc.reset();
  } else if (axis == "g_over_gc") {
    c.g_over_gc = v;
    c.g.reset();
  } else if (axis == "r") {
    c.r = v;
    c.r_ni_max = false;
  } else if (axis == "beta_h") {
    c.beta_h = v;
  } else if (axis == "beta_c") {
    c.beta_c = v;
  } else if (axis == "tau") {
    c.tau = v;
  } else if (axis == "n") {
    c.n = static_cast<int>(v);
  } else if (axis == "p") {
    c.p = v;
  }
}

}  // namespace

double critical_g(int n, double p, double omega0, spinotto_boundary boundary) {
  static std::mutex mutex;
  static std::map<std::tuple<int, double, double, int>, double> cache;
  const auto key = std::make_tuple(n, p, omega0, static_cast<int>(boundary));
  {
    std::lock_guard<std::mutex> lock(mutex);
    if (auto it = cache.find(key); it != cache.end()) return it->second;
  }
  const Chain chain(n, p, 0.0, omega0, boundary);
  double g_c = 0.0;
  check(spinotto_critical_coupling(chain.get(), 0.01, &g_c), "critical coupling");
  std::lock_guard<std::mutex> lock(mutex);
  cache.emplace(key, g_c);
  return g_c;
}

Point resolve(const RunConfig& cfg) {
  Point pt;
  pt.n = cfg.n;
  pt.p = cfg.p;
  pt.omega0 = cfg.omega0;
  pt.boundary = cfg.boundary;
  if (cfg.g_over_gc) {
    pt.g_c = critical_g(cfg.n, cfg.p, cfg.omega0, cfg.boundary);
    pt.g = *cfg.g_over_gc * *pt.g_c;
  } else {
    pt.g = cfg.g.value_or(0.0);
    try {
      pt.g_c = critical_g(cfg.n, cfg.p, cfg.omega0, cfg.boundary);
    } catch (const CliError&) {
      // g was given directly; the g_over_gc column stays empty
    }
  }
  pt.beta_h = cfg.beta_h;
  pt.beta_c = cfg.beta_c.value_or(2.0 * cfg.beta_h);
  if (cfg.r_ni_max)
    check(spinotto_r_ni_max(cfg.beta_h, cfg.omega0, &pt.r), "r_ni_max");
  else
    pt.r = cfg.r.value_or(1.1);
  pt.tau = cfg.tau;
  pt.mode = cfg.mode;
  pt.cd_variant = cfg.cd_variant;
  pt.steps = cfg.steps;
  return pt;
}

Outcome evaluate(const Point& pt, bool oracle) {
  Outcome out;
  const Chain chain(pt.n, pt.p, pt.g, pt.omega0, pt.boundary);
  spinotto_cycle_params params;
  spinotto_cycle_params_init(&params);
  params.r = pt.r;
  params.beta_h = pt.beta_h;
  params.beta_c = pt.beta_c;
  params.tau = pt.tau;
  params.mode = pt.mode;
  params.cd_variant = pt.cd_variant;
  params.steps = pt.steps;
  spinotto_performance perf;
  check(spinotto_run_cycle(chain.get(), &params, &perf), "cycle");
  out.perf = perf;
  if (oracle) {
    double w = 0.0, eta = 0.0;
    if (std::isinf(pt.p)) {
      spinotto_tfim_result t;
      if (spinotto_tfim_cycle(pt.n, pt.beta_h, pt.beta_c, pt.r, pt.omega0, pt.g, &t) ==
          SPINOTTO_OK) {
        out.oracle_w = t.work;
        out.oracle_eta = t.efficiency;
      }
    } else if (pt.g_c &&
               spinotto_two_level_performance(pt.p, pt.n, pt.r, pt.beta_h, pt.beta_c, pt.omega0,
                                              pt.g, *pt.g_c, SPINOTTO_FLUCTUATION_EXACT, &w,
                                              &eta) == SPINOTTO_OK) {
      out.oracle_w = w;
      out.oracle_eta = eta;
    }
    if (out.oracle_eta && !std::isfinite(*out.oracle_eta)) out.oracle_eta.reset();
    if (out.oracle_w && !std::isfinite(*out.oracle_w)) out.oracle_w.reset();
  }
  return out;
}

std::string mode_name(spinotto_mode m) {
  switch (m) {
    case SPINOTTO_MODE_DIABATIC:
      return "diabatic";
    case SPINOTTO_MODE_DIABATIC_CD:
      return "diabatic_cd";
    default:
      return "adiabatic";
  }
}

namespace {

std::string variant_name(spinotto_cd_variant v) {
  switch (v) {
    case SPINOTTO_CD_CHI_ONE:
      return "chi_one";
    case SPINOTTO_CD_ACTION_MINIMUM:
      return "action_minimum";
    default:
      return "exact_chi";
  }
}

}  // namespace

std::string p_label(double p) { return "p" + format_number(p); }

std::vector<std::string> result_header(bool with_error, bool oracle) {
  std::vector<std::string> h = {"N",     "p",       "g",      "g_over_gc", "omega0",     "r",
                                "beta_H", "beta_C", "tau",    "mode",      "W",          "Q_H",
                                "Q_C",   "eta",     "eta_carnot", "P",     "is_engine",  "eta_defined",
                                "cd_variant"};
  if (with_error) h.push_back("error");
  if (oracle) {
    h.push_back("oracle_W");
    h.push_back("oracle_eta");
  }
  return h;
}

std::vector<std::string> result_row(const Point& pt, const Outcome& out, bool with_error,
                                    bool oracle) {
  std::optional<double> g_over_gc;
  if (pt.g_c && *pt.g_c > 0.0) g_over_gc = pt.g / *pt.g_c;
  std::vector<std::string> row = {std::to_string(pt.n), format_number(pt.p),
                                  format_number(pt.g),  cell(g_over_gc),
                                  format_number(pt.omega0), format_number(pt.r),
                                  format_number(pt.beta_h), format_number(pt.beta_c),
                                  format_number(pt.tau),    mode_name(pt.mode)};
  if (out.perf) {
    const auto& f = *out.perf;
    row.insert(row.end(), {format_number(f.work), format_number(f.heat_hot),
                           format_number(f.heat_cold),
                           f.efficiency_defined ? format_number(f.efficiency) : "",
                           format_number(f.carnot), format_number(f.power),
                           f.is_engine ? "1" : "0", f.efficiency_defined ? "1" : "0"});
  } else {
    row.insert(row.end(), 8, "");
  }
  row.push_back(pt.mode == SPINOTTO_MODE_DIABATIC_CD ? variant_name(pt.cd_variant) : "");
  if (with_error) row.push_back(out.error);
  if (oracle) {
    row.push_back(cell(out.oracle_w));
    row.push_back(cell(out.oracle_eta));
  }
  return row;
}

std::vector<std::string> unresolved_row(const RunConfig& cfg, const std::string& error,
                                        bool oracle) {
  std::vector<std::string> row = {std::to_string(cfg.n), format_number(cfg.p),
                                  cell(cfg.g),           cell(cfg.g_over_gc),
                                  format_number(cfg.omega0), cell(cfg.r),
                                  format_number(cfg.beta_h), cell(cfg.beta_c),
                                  format_number(cfg.tau),    mode_name(cfg.mode)};
  row.insert(row.end(), 9, "");
  row.push_back(error);
  if (oracle) row.insert(row.end(), 2, "");
  return row;
}

std::string join_path(const std::string& dir, const std::string& name) {
  return (std::filesystem::path(dir) / name).string();
}

void emit(const Table& table, const std::string& out_dir, const std::string& name) {
  table.write(std::cout);
  if (out_dir.empty()) return;
  std::error_code ec;
  std::filesystem::create_directories(out_dir, ec);
  if (ec) throw CliError("cannot create " + out_dir + ": " + ec.message(), kUsage);
  table.write_file(join_path(out_dir, name));
}

int cmd_cycle(const RunConfig& cfg) {
  const Point pt = resolve(cfg);
  const Outcome out = evaluate(pt, cfg.oracle);
  Table table(result_header(false, cfg.oracle));
  table.add_row(result_row(pt, out, false, cfg.oracle));
  emit(table, cfg.out_dir, "cycle.csv");
  return out.perf->is_engine ? kOk : kNotEngine;
}

int cmd_sweep(const RunConfig& cfg) {
  if (cfg.axes.empty()) throw CliError("sweep needs [sweep] axes", kUsage);
  for (const auto& a : cfg.axes)
    if (a.name == "n")
      for (double v : a.values)
        if (v != std::round(v) || v < 1)
          throw CliError("sweep axis n needs positive integers, got " + format_number(v), kUsage);

  std::vector<RunConfig> configs;
  const auto& outer = cfg.axes[0];
  const Axis* inner = cfg.axes.size() > 1 ? &cfg.axes[1] : nullptr;
  for (double a : outer.values) {
    if (!inner) {
      configs.push_back(cfg);
      set_axis(configs.back(), outer.name, a);
      continue;
    }
    for (double b : inner->values) {
      configs.push_back(cfg);
      set_axis(configs.back(), outer.name, a);
      set_axis(configs.back(), inner->name, b);
    }
  }

  std::vector<std::vector<std::string>> rows(configs.size());
  std::vector<char> failed(configs.size(), 0);
  parallel_for(configs.size(), cfg.workers, [&](std::size_t i) {
    std::optional<Point> pt;
    try {
      pt = resolve(configs[i]);
      rows[i] = result_row(*pt, evaluate(*pt, cfg.oracle), true, cfg.oracle);
    } catch (const std::exception& e) {
      failed[i] = 1;
      Outcome out;
      out.error = e.what();
      rows[i] = pt ? result_row(*pt, out, true, cfg.oracle)
                   : unresolved_row(configs[i], e.what(), cfg.oracle);
    }
  });

  Table table(result_header(true, cfg.oracle));
  for (auto& r : rows) table.add_row(std::move(r));
  emit(table, cfg.out_dir, "sweep.csv");
  for (char f : failed)
    if (f) return kNumerical;
  return kOk;
}

int cmd_gc(const RunConfig& cfg) {
  std::vector<double> values(cfg.powers.size());
  std::vector<std::string> errors(cfg.powers.size());
  parallel_for(cfg.powers.size(), cfg.workers, [&](std::size_t i) {
    try {
      const Chain chain(cfg.n, cfg.powers[i], 0.0, cfg.omega0, cfg.boundary);
      check(spinotto_critical_coupling(chain.get(), cfg.gc_step, &values[i]), "critical coupling");
    } catch (const std::exception& e) {
      errors[i] = e.what();
    }
  });
  for (const auto& e : errors)
    if (!e.empty()) throw CliError(e, kNumerical);
  Table table({"N", "p", "g_c"});
  for (std::size_t i = 0; i < values.size(); ++i)
    table.add_row({std::to_string(cfg.n), format_number(cfg.powers[i]), format_number(values[i])});
  emit(table, cfg.out_dir, "gc.csv");
  return kOk;
}

int cmd_spectrum(const RunConfig& cfg) {
  const Chain chain(cfg.n, cfg.p, resolved_g(cfg), cfg.omega0, cfg.boundary);
  std::vector<double> energies(std::size_t{1} << cfg.n);
  std::size_t count = 0;
  check(spinotto_spectrum(chain.get(), cfg.spectrum_omega.value_or(cfg.omega0), energies.data(),
                          energies.size(), &count),
        "spectrum");
  if (cfg.levels > 0 && static_cast<std::size_t>(cfg.levels) < count)
    count = static_cast<std::size_t>(cfg.levels);
  Table table({"index", "energy"});
  for (std::size_t i = 0; i < count; ++i)
    table.add_row({std::to_string(i), format_number(energies[i])});
  emit(table, cfg.out_dir, "spectrum.csv");
  return kOk;
}

int cmd_entanglement(const RunConfig& cfg) {
  double entropy = 0.0;
  check(spinotto_w_state_entropy(cfg.n, &entropy), "W-state entropy");
  const Chain product(cfg.n, cfg.p, 0.0, cfg.omega0, cfg.boundary);
  Table table({"N", "beta_delta", "alpha", "witness_closed_form", "witness_numeric", "pt_min_eig",
               "product_gibbs_pt_min_eig", "w_state_entropy"});
  for (double bd : cfg.beta_delta) {
    double closed = 0.0, numeric = 0.0, pt_min = 0.0, product_min = 0.0;
    check(spinotto_ppt_witness(cfg.n, bd, 1.0, cfg.alpha, &closed, &numeric), "ppt witness");
    check(spinotto_two_level_pt_min_eig(cfg.n, bd, 1.0, &pt_min), "partial transpose");
    check(spinotto_gibbs_pt_min_eig(product.get(), cfg.omega0, bd / cfg.omega0, &product_min),
          "partial transpose");
    table.add_row({std::to_string(cfg.n), format_number(bd), format_number(cfg.alpha),
                   format_number(closed), format_number(numeric), format_number(pt_min),
                   format_number(product_min), format_number(entropy)});
  }
  emit(table, cfg.out_dir, "entanglement.csv");
  return kOk;
}

int cmd_cd_coeffs(const RunConfig& cfg) {
  const Chain chain(cfg.n, cfg.p, resolved_g(cfg), cfg.omega0, cfg.boundary);
  const double omega = cfg.cd_omega.value_or(cfg.omega0);
  const auto n = static_cast<std::size_t>(cfg.n);
  std::vector<double> c(n * n);
  check(spinotto_cd_coefficients(chain.get(), omega, cfg.cd_omega_dot, cfg.cd_variant, c.data(),
                                 c.size()),
        "cd coefficients");
  double residual = 0.0, action = 0.0;
  check(spinotto_cd_stationarity_residual(chain.get(), omega, cfg.cd_omega_dot, c.data(),
                                          &residual),
        "stationarity residual");
  check(spinotto_cd_action(chain.get(), omega, cfg.cd_omega_dot, c.data(), &action), "cd action");
  Table table({"m", "n", "C"});
  for (std::size_t a = 0; a < n; ++a)
    for (std::size_t b = 0; b < n; ++b)
      if (a != b) table.add_row({std::to_string(a), std::to_string(b), format_number(c[a * n + b])});
  emit(table, cfg.out_dir, "cd_coeffs.csv");
  std::cerr << "stationarity_residual=" << format_number(residual)
            << " action=" << format_number(action) << '\n';
  return kOk;
}

}  // namespace cli
