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

#include <charconv>
#include <cmath>
#include <filesystem>
#include <iostream>
#include <limits>
#include <map>

#include "api.hpp"
#include "commands.hpp"
#include "pool.hpp"
#include "svg.hpp"

namespace cli {

namespace {

constexpr double kInf = std::numeric_limits<double>::infinity();

struct Curve {
  std::string name;
  Table table;
  std::string plot;  // curves sharing a plot go into one SVG
  std::string x;
  std::string y;
};

struct Figure {
  std::vector<Curve> curves;
  std::map<std::string, PlotSpec> plots;
};

std::vector<double> linspace(double lo, double hi, int count) {
  std::vector<double> out;
  for (int k = 0; k < count; ++k) out.push_back(lo + (hi - lo) * k / (count - 1));
  return out;
}

std::vector<double> logspace(double lo, double hi, int count) {
  std::vector<double> out;
  for (int k = 0; k < count; ++k)
    out.push_back(std::exp(std::log(lo) + (std::log(hi) - std::log(lo)) * k / (count - 1)));
  return out;
}

// Runs every point; the first failure (by index) aborts the figure.
std::vector<Outcome> run_points(const std::vector<Point>& points, int workers) {
  std::vector<Outcome> out(points.size());
  std::vector<std::string> errors(points.size());
  std::vector<int> codes(points.size(), kNumerical);
  parallel_for(points.size(), workers, [&](std::size_t i) {
    try {
      out[i] = evaluate(points[i], false);
    } catch (const CliError& e) {
      errors[i] = e.what();
      codes[i] = e.code();
    } catch (const std::exception& e) {
      errors[i] = e.what();
    }
  });
  for (std::size_t i = 0; i < points.size(); ++i)
    if (!errors[i].empty()) throw CliError(errors[i], codes[i]);
  return out;
}

// g_c for every p, computed in parallel ahead of the cycles that need it.
void warm_critical(const RunConfig& cfg, const std::vector<double>& powers) {
  std::vector<std::string> errors(powers.size());
  parallel_for(powers.size(), cfg.workers, [&](std::size_t i) {
    try {
      critical_g(cfg.n, powers[i], cfg.omega0, cfg.boundary);
    } catch (const std::exception& e) {
      errors[i] = e.what();
    }
  });
  for (const auto& e : errors)
    if (!e.empty()) throw CliError(e, kNumerical);
}

Table cycle_table(const std::vector<Point>& points, const std::vector<Outcome>& outcomes,
                  std::size_t begin, std::size_t end) {
  Table t(result_header(false, false));
  for (std::size_t i = begin; i < end; ++i) t.add_row(result_row(points[i], outcomes[i], false, false));
  return t;
}

RunConfig with_p(RunConfig c, double p) {
  c.p = p;
  return c;
}

RunConfig at_gc_fraction(RunConfig c, double fraction) {
  c.g_over_gc = fraction;
  c.g.reset();
  return c;
}

// One cycle curve per p over a single parameter.
template <class Setter>
void cycle_curves(Figure& fig, const RunConfig& cfg, const std::vector<double>& powers,
                  const std::vector<double>& grid, Setter set, const std::string& plot,
                  const std::string& x) {
  std::vector<Point> points;
  for (double p : powers)
    for (double v : grid) {
      RunConfig c = with_p(cfg, p);
      set(c, v);
      points.push_back(resolve(c));
    }
  const auto outcomes = run_points(points, cfg.workers);
  for (std::size_t k = 0; k < powers.size(); ++k)
    fig.curves.push_back({"exact_" + p_label(powers[k]),
                          cycle_table(points, outcomes, k * grid.size(), (k + 1) * grid.size()),
                          plot, x, "W"});
}

Figure fig2b(const RunConfig& cfg, const std::vector<double>& powers) {
  Figure fig;
  fig.plots["work"] = {"Adiabatic work vs coupling", "g/g_c", "W", false};
  const auto grid = linspace(0.0, 1.5, 31);
  cycle_curves(fig, cfg, powers, grid, [](RunConfig& c, double v) { c = at_gc_fraction(c, v); },
               "work", "g_over_gc");
  for (double p : powers) {
    Table tl({"g_over_gc", "g", "W", "eta"});
    Table tf({"g_over_gc", "g", "W", "eta"});
    for (double v : grid) {
      const Point pt = resolve(at_gc_fraction(with_p(cfg, p), v));
      double w = 0.0, eta = 0.0;
      check(spinotto_two_level_performance(p, pt.n, pt.r, pt.beta_h, pt.beta_c, pt.omega0, pt.g,
                                           *pt.g_c, SPINOTTO_FLUCTUATION_EXACT, &w, &eta),
            "two-level estimate");
      // the two-level estimate diverges as the gap closes
      if (v < 1.0)
        tl.add_row({format_number(v), format_number(pt.g), format_number(w), format_number(eta)});
      if (std::isinf(p)) {
        spinotto_tfim_result t;
        check(spinotto_tfim_cycle(pt.n, pt.beta_h, pt.beta_c, pt.r, pt.omega0, pt.g, &t),
              "free-fermion cycle");
        tf.add_row({format_number(v), format_number(pt.g), format_number(t.work),
                    format_number(t.efficiency)});
      }
    }
    if (std::isinf(p)) fig.curves.push_back({"tfim", std::move(tf), "work", "g_over_gc", "W"});
    fig.curves.push_back({"two_level_" + p_label(p), std::move(tl), "work", "g_over_gc", "W"});
  }
  return fig;
}

void non_interacting_curve(Figure& fig, const RunConfig& cfg, const std::vector<double>& grid,
                           void (*set)(RunConfig&, double), const std::string& plot,
                           const std::string& x) {
  std::vector<Point> points;
  for (double v : grid) {
    RunConfig c = cfg;
    c.g = 0.0;
    c.g_over_gc.reset();
    set(c, v);
    points.push_back(resolve(c));
  }
  const auto outcomes = run_points(points, cfg.workers);
  fig.curves.push_back({"non_interacting", cycle_table(points, outcomes, 0, points.size()), plot, x, "W"});
}

Figure fig2c(const RunConfig& cfg, const std::vector<double>& powers) {
  Figure fig;
  fig.plots["work"] = {"Work vs compression ratio at g = g_c", "r", "W", false};
  const auto grid = linspace(1.01, 1.5, 50);
  auto set_r = [](RunConfig& c, double v) {
    c.r = v;
    c.r_ni_max = false;
  };
  cycle_curves(fig, at_gc_fraction(cfg, 1.0), powers, grid, set_r, "work", "r");
  non_interacting_curve(fig, cfg, grid, set_r, "work", "r");
  return fig;
}

Figure fig3a(const RunConfig& cfg, const std::vector<double>& powers) {
  Figure fig;
  fig.plots["work"] = {"Work vs hot inverse temperature at g = g_c", "beta_H", "W", true};
  const auto grid = logspace(0.5, 40.0, 25);
  auto set_beta = [](RunConfig& c, double v) { c.beta_h = v; };
  cycle_curves(fig, at_gc_fraction(cfg, 1.0), powers, grid, set_beta, "work", "beta_H");
  non_interacting_curve(fig, cfg, grid, set_beta, "work", "beta_H");
  return fig;
}

Figure fig3b(const RunConfig& cfg, const std::vector<double>& powers) {
  Figure fig;
  fig.plots["occupation"] = {"First-band occupation at g = g_c", "beta", "n_1", true};
  const auto grid = logspace(0.1, 40.0, 40);
  for (double p : powers) {
    const double g = critical_g(cfg.n, p, cfg.omega0, cfg.boundary);
    const Chain chain(cfg.n, p, g, cfg.omega0, cfg.boundary);
    Table t({"beta", "n0", "n1", "band_2_N", "band_above_N"});
    for (double beta : grid) {
      spinotto_bands b;
      check(spinotto_occupation_bands(chain.get(), cfg.omega0, beta, &b), "occupation bands");
      t.add_row({format_number(beta), format_number(b.ground), format_number(b.first),
                 format_number(b.low_band), format_number(b.high_band)});
    }
    fig.curves.push_back({"bands_" + p_label(p), std::move(t), "occupation", "beta", "n1"});
  }
  return fig;
}

Figure fig3c(const RunConfig& cfg, const std::vector<double>& powers) {
  Figure fig;
  fig.plots["ln_z"] = {"ln Z minus N ln 2 at g = g_c", "beta", "ln Z - N ln 2", true};
  const auto grid = logspace(0.01, 10.0, 31);
  for (double p : powers) {
    const double g = critical_g(cfg.n, p, cfg.omega0, cfg.boundary);
    const Chain chain(cfg.n, p, g, cfg.omega0, cfg.boundary);
    Table t({"beta", "ln_z", "ln_z_ground_zero", "excess", "cumulant_excess", "printed_excess"});
    const double ln_z_inf = cfg.n * std::log(2.0);
    for (double beta : grid) {
      double ln_z = 0.0, ln_z0 = 0.0, printed = 0.0, cumulant = 0.0;
      check(spinotto_ln_partition(chain.get(), cfg.omega0, beta, 0, &ln_z), "ln Z");
      check(spinotto_ln_partition(chain.get(), cfg.omega0, beta, 1, &ln_z0), "ln Z");
      check(spinotto_high_t_expansion(chain.get(), beta, cfg.omega0, &printed, &cumulant),
            "high-temperature expansion");
      t.add_row({format_number(beta), format_number(ln_z), format_number(ln_z0),
                 format_number(ln_z - ln_z_inf), format_number(cumulant - ln_z_inf),
                 format_number(printed - ln_z_inf)});
    }
    fig.curves.push_back({"ln_z_" + p_label(p), std::move(t), "ln_z", "beta", "excess"});
  }
  return fig;
}

Figure fig4a(const RunConfig& cfg) {
  Figure fig;
  fig.plots["work"] = {"Finite-time work", "tau", "W", true};
  fig.plots["power"] = {"Finite-time power", "tau", "P", true};
  const auto grid = logspace(0.25, 64.0, 17);
  const std::pair<const char*, spinotto_mode> modes[] = {{"adiabatic", SPINOTTO_MODE_ADIABATIC},
                                                         {"diabatic", SPINOTTO_MODE_DIABATIC},
                                                         {"cd", SPINOTTO_MODE_DIABATIC_CD}};
  std::vector<Point> points;
  for (const auto& [name, mode] : modes)
    for (double tau : grid) {
      RunConfig c = cfg;
      c.mode = mode;
      c.tau = tau;
      points.push_back(resolve(c));
    }
  const auto outcomes = run_points(points, cfg.workers);
  std::size_t k = 0;
  for (const auto& [name, mode] : modes) {
    Table t = cycle_table(points, outcomes, k * grid.size(), (k + 1) * grid.size());
    fig.curves.push_back({std::string(name), t, "work", "tau", "W"});
    fig.curves.push_back({std::string(name) + "_power", std::move(t), "power", "tau", "P"});
    ++k;
  }
  return fig;
}

Figure fig4b(const RunConfig& cfg, const std::vector<double>& powers) {
  Figure fig;
  fig.plots["work"] = {"Counterdiabatic work at fixed tau", "g/g_c", "W", false};
  const auto grid = linspace(0.0, 1.0, 11);
  for (double p : powers) {
    RunConfig c = with_p(cfg, p);
    c.mode = SPINOTTO_MODE_DIABATIC_CD;
    if (!std::isinf(p)) c.cd_variant = SPINOTTO_CD_CHI_ONE;
    std::vector<Point> points;
    for (double v : grid) {
      RunConfig cd = at_gc_fraction(c, v);
      points.push_back(resolve(cd));
      cd.mode = SPINOTTO_MODE_ADIABATIC;
      points.push_back(resolve(cd));
    }
    const auto outcomes = run_points(points, cfg.workers);
    Table cd_table(result_header(false, false)), ad_table(result_header(false, false));
    for (std::size_t i = 0; i < points.size(); i += 2) {
      cd_table.add_row(result_row(points[i], outcomes[i], false, false));
      ad_table.add_row(result_row(points[i + 1], outcomes[i + 1], false, false));
    }
    fig.curves.push_back({"cd_" + p_label(p), std::move(cd_table), "work", "g_over_gc", "W"});
    fig.curves.push_back({"adiabatic_" + p_label(p), std::move(ad_table), "work", "g_over_gc", "W"});
  }
  return fig;
}

Figure s1(const RunConfig& cfg, const std::vector<double>& powers) {
  Figure fig;
  fig.plots["gap"] = {"Gap vs coupling", "g", "gap", false};
  fig.plots["second_difference"] = {"Second difference of the gap", "g", "d2 gap / dg2", false};
  fig.plots["gap_vs_n"] = {"Gap vs N at g = 0.4 omega0", "N", "gap", false};
  const auto grid = linspace(0.0, 2.0, 201);
  for (double p : powers) {
    const Chain chain(cfg.n, p, 0.0, cfg.omega0, cfg.boundary);
    std::vector<double> gaps(grid.size()), d2(grid.size() - 2);
    check(spinotto_gap_curve(chain.get(), cfg.omega0, grid.data(), grid.size(), gaps.data(),
                             d2.data()),
          "gap curve");
    Table t({"g", "gap", "second_difference"});
    for (std::size_t i = 0; i < grid.size(); ++i)
      t.add_row({format_number(grid[i]), format_number(gaps[i]),
                 i == 0 || i + 1 == grid.size() ? "" : format_number(d2[i - 1])});
    fig.curves.push_back({"gap_" + p_label(p), t, "gap", "g", "gap"});
    fig.curves.push_back({"second_difference_" + p_label(p), std::move(t), "second_difference", "g",
                          "second_difference"});

    Table tn({"N", "gap"});
    for (int n = 2; n <= cfg.n; ++n) {
      const Chain c(n, p, 0.4 * cfg.omega0, cfg.omega0, cfg.boundary);
      double gap = 0.0;
      check(spinotto_energy_gap(c.get(), cfg.omega0, &gap), "gap");
      tn.add_row({std::to_string(n), format_number(gap)});
    }
    fig.curves.push_back({"gap_vs_n_" + p_label(p), std::move(tn), "gap_vs_n", "N", "gap"});
  }
  return fig;
}

Figure s2(const RunConfig& cfg, const std::vector<double>& powers) {
  Figure fig;
  fig.plots["work"] = {"Work vs N", "N", "W", false};
  fig.plots["p1"] = {"Work vs N at p = 1", "N", "W", false};
  std::vector<double> sizes;
  for (int n = 4; n <= cfg.n; ++n) sizes.push_back(n);
  auto set_n = [](RunConfig& c, double v) { c.n = static_cast<int>(v); };
  cycle_curves(fig, cfg, powers, sizes, set_n, "work", "N");

  const double g_values[] = {0.2, 0.3, 0.4, 0.5};
  for (double g : g_values) {
    RunConfig c = with_p(cfg, 1.0);
    c.g = g * cfg.omega0;
    c.g_over_gc.reset();
    std::vector<Point> points;
    for (double n : sizes) {
      RunConfig cn = c;
      set_n(cn, n);
      points.push_back(resolve(cn));
    }
    const auto outcomes = run_points(points, cfg.workers);
    Table t = cycle_table(points, outcomes, 0, points.size());
    Table pred({"N", "g", "W"});
    for (const auto& pt : points) {
      double w = 0.0;
      check(spinotto_p1_work_scaling(pt.n, pt.g, pt.beta_h, pt.r, pt.omega0, &w), "p=1 scaling");
      pred.add_row({std::to_string(pt.n), format_number(pt.g), format_number(w)});
    }
    const std::string suffix = "g" + format_number(g);
    fig.curves.push_back({"p1_" + suffix, std::move(t), "p1", "N", "W"});
    fig.curves.push_back({"p1_prediction_" + suffix, std::move(pred), "p1", "N", "W"});
  }
  return fig;
}

double parse_cell(const std::string& s) {
  double v = std::numeric_limits<double>::quiet_NaN();
  if (!s.empty()) std::from_chars(s.data(), s.data() + s.size(), v);
  return v;
}

}  // namespace

const std::vector<std::string>& figure_names() {
  static const std::vector<std::string> names = {"fig2b", "fig2c", "fig3a", "fig3b", "fig3c",
                                                 "fig4a", "fig4b", "s1",    "s2"};
  return names;
}

RunConfig figure_defaults(const std::string& name) {
  RunConfig c;
  c.n = 10;
  c.beta_h = 10.0;
  c.beta_c.reset();
  c.mode = SPINOTTO_MODE_ADIABATIC;
  if (name == "fig2b" || name == "fig2c" || name == "s2") {
    c.r.reset();
    c.r_ni_max = true;
  } else if (name.rfind("fig3", 0) == 0) {
    c.r = 1.1;
  } else if (name == "fig4a" || name == "fig4b") {
    c.r.reset();
    c.r_ni_max = true;
    c.p = kInf;
    c.cd_variant = SPINOTTO_CD_FULL;
    if (name == "fig4a") c.g_over_gc = 0.2;
    else c.tau = 1.0;
  }
  if (name == "s2") c.g = 0.4;
  return c;
}

int cmd_figure(const std::string& name, const RunConfig& cfg, bool p_given) {
  const std::vector<double> powers =
      p_given ? std::vector<double>{cfg.p} : std::vector<double>{1.0, 2.0, 3.0, kInf};
  Figure fig;
  if (name == "fig2b" || name == "fig2c" || name.rfind("fig3", 0) == 0 || name == "fig4b")
    warm_critical(cfg, powers);
  if (name == "fig2b") fig = fig2b(cfg, powers);
  else if (name == "fig2c") fig = fig2c(cfg, powers);
  else if (name == "fig3a") fig = fig3a(cfg, powers);
  else if (name == "fig3b") fig = fig3b(cfg, powers);
  else if (name == "fig3c") fig = fig3c(cfg, powers);
  else if (name == "fig4a") fig = fig4a(cfg);
  else if (name == "fig4b") fig = fig4b(cfg, powers);
  else if (name == "s1") fig = s1(cfg, powers);
  else if (name == "s2") fig = s2(cfg, powers);

  const std::string dir = cfg.out_dir.empty() ? "." : cfg.out_dir;
  std::error_code ec;
  std::filesystem::create_directories(dir, ec);
  if (ec) throw CliError("cannot create " + dir + ": " + ec.message(), kUsage);
  for (const auto& c : fig.curves) {
    const std::string path = join_path(dir, name + "_" + c.name + ".csv");
    c.table.write_file(path);
    std::cout << path << '\n';
  }
  if (cfg.svg) {
    for (const auto& [key, plot] : fig.plots) {
      std::vector<Series> series;
      for (const auto& c : fig.curves) {
        if (c.plot != key) continue;
        Series s{c.name, {}, {}};
        const int xi = c.table.column(c.x), yi = c.table.column(c.y);
        for (const auto& row : c.table.rows()) {
          s.x.push_back(parse_cell(row[static_cast<std::size_t>(xi)]));
          s.y.push_back(parse_cell(row[static_cast<std::size_t>(yi)]));
        }
        series.push_back(std::move(s));
      }
      const std::string path = join_path(dir, name + "_" + key + ".svg");
      write_svg(path, plot, series);
      std::cout << path << '\n';
    }
  }
  return kOk;
}

}  // namespace cli
