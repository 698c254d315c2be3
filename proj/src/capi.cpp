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

#include "spinotto/spinotto.h"

#include <cmath>
#include <limits>
#include <new>
#include <string>

#include "spinotto/analytic.hpp"
#include "spinotto/counterdiabatic.hpp"
#include "spinotto/cycle.hpp"
#include "spinotto/entanglement.hpp"
#include "spinotto/error.hpp"
#include "spinotto/spectral.hpp"
#include "spinotto/thermal.hpp"

struct spinotto_chain {
  spinotto::ChainParams params;
};

namespace {

thread_local std::string last_error;

spinotto_status status_of(spinotto::ErrorKind kind) {
  switch (kind) {
    case spinotto::ErrorKind::invalid_argument:
      return SPINOTTO_ERR_INVALID_ARGUMENT;
    case spinotto::ErrorKind::dimension:
      return SPINOTTO_ERR_DIMENSION;
    case spinotto::ErrorKind::numerical:
      return SPINOTTO_ERR_NUMERICAL;
    case spinotto::ErrorKind::grid:
      return SPINOTTO_ERR_GRID;
    case spinotto::ErrorKind::convergence:
      return SPINOTTO_ERR_CONVERGENCE;
  }
  return SPINOTTO_ERR_INTERNAL;
}

template <class F>
spinotto_status guarded(F&& body) {
  try {
    body();
    last_error.clear();
    return SPINOTTO_OK;
  } catch (const spinotto::Error& e) {
    last_error = e.what();
    return status_of(e.kind());
  } catch (const std::bad_alloc&) {
    last_error = "out of memory";
    return SPINOTTO_ERR_DIMENSION;
  } catch (const std::exception& e) {
    last_error = e.what();
    return SPINOTTO_ERR_INTERNAL;
  } catch (...) {
    last_error = "unknown failure";
    return SPINOTTO_ERR_INTERNAL;
  }
}

spinotto_status null_pointer() {
  last_error = "null pointer argument";
  return SPINOTTO_ERR_NULL_POINTER;
}

spinotto_status too_small(std::size_t need) {
  last_error = "output buffer too small: need " + std::to_string(need) + " entries";
  return SPINOTTO_ERR_BUFFER_TOO_SMALL;
}

spinotto::Boundary to_boundary(spinotto_boundary b) {
  switch (b) {
    case SPINOTTO_BOUNDARY_OPEN:
      return spinotto::Boundary::open;
    case SPINOTTO_BOUNDARY_PERIODIC:
      return spinotto::Boundary::periodic;
  }
  spinotto::fail(spinotto::ErrorKind::invalid_argument, "unknown boundary");
}

spinotto::CdVariant to_variant(spinotto_cd_variant v) {
  switch (v) {
    case SPINOTTO_CD_FULL:
      return spinotto::CdVariant::full;
    case SPINOTTO_CD_CHI_ONE:
      return spinotto::CdVariant::chi_one;
    case SPINOTTO_CD_ACTION_MINIMUM:
      return spinotto::CdVariant::action_minimum;
  }
  spinotto::fail(spinotto::ErrorKind::invalid_argument, "unknown counterdiabatic variant");
}

spinotto::FluctuationForm to_form(spinotto_fluctuation f) {
  switch (f) {
    case SPINOTTO_FLUCTUATION_EXACT:
      return spinotto::FluctuationForm::exact;
    case SPINOTTO_FLUCTUATION_ASYMPTOTIC:
      return spinotto::FluctuationForm::asymptotic;
  }
  spinotto::fail(spinotto::ErrorKind::invalid_argument, "unknown fluctuation form");
}

spinotto::StrokeMode to_mode(spinotto_mode m) {
  switch (m) {
    case SPINOTTO_MODE_ADIABATIC:
      return spinotto::StrokeMode::adiabatic;
    case SPINOTTO_MODE_DIABATIC:
      return spinotto::StrokeMode::diabatic;
    case SPINOTTO_MODE_DIABATIC_CD:
      return spinotto::StrokeMode::diabatic_cd;
  }
  spinotto::fail(spinotto::ErrorKind::invalid_argument, "unknown stroke mode");
}

Eigen::MatrixXd read_square(const double* c, int n) {
  Eigen::MatrixXd m(n, n);
  for (int a = 0; a < n; ++a)
    for (int b = 0; b < n; ++b) m(a, b) = c[static_cast<std::size_t>(a * n + b)];
  return m;
}

}  // namespace

extern "C" {

const char* spinotto_version(void) { return "0.1.0"; }

const char* spinotto_last_error(void) { return last_error.c_str(); }

const char* spinotto_status_string(spinotto_status status) {
  switch (status) {
    case SPINOTTO_OK:
      return "ok";
    case SPINOTTO_ERR_INVALID_ARGUMENT:
      return "invalid argument";
    case SPINOTTO_ERR_DIMENSION:
      return "dimension limit exceeded";
    case SPINOTTO_ERR_NUMERICAL:
      return "numerical failure";
    case SPINOTTO_ERR_GRID:
      return "grid does not bracket transition";
    case SPINOTTO_ERR_CONVERGENCE:
      return "convergence failure";
    case SPINOTTO_ERR_NULL_POINTER:
      return "null pointer";
    case SPINOTTO_ERR_BUFFER_TOO_SMALL:
      return "buffer too small";
    case SPINOTTO_ERR_INTERNAL:
      return "internal error";
  }
  return "unknown status";
}

double spinotto_infinity(void) { return std::numeric_limits<double>::infinity(); }

int spinotto_max_sites(void) { return spinotto::max_sites(); }

spinotto_status spinotto_chain_create(int n, double p, double g, double omega0,
                                      spinotto_boundary boundary, spinotto_chain** out) {
  if (!out) return null_pointer();
  return guarded([&] {
    spinotto::ChainParams params{n, p, g, omega0, to_boundary(boundary)};
    params.validate();
    if (n > spinotto::max_sites())
      spinotto::fail(spinotto::ErrorKind::dimension, "N exceeds the configured maximum");
    *out = new spinotto_chain{params};
  });
}

spinotto_status spinotto_chain_with_coupling(const spinotto_chain* chain, double g,
                                             spinotto_chain** out) {
  if (!chain || !out) return null_pointer();
  return guarded([&] {
    spinotto::ChainParams params = chain->params;
    params.g = g;
    params.validate();
    *out = new spinotto_chain{params};
  });
}

void spinotto_chain_destroy(spinotto_chain* chain) { delete chain; }

spinotto_status spinotto_chain_get_info(const spinotto_chain* chain, spinotto_chain_info* out) {
  if (!chain || !out) return null_pointer();
  const auto& p = chain->params;
  *out = spinotto_chain_info{p.n, p.p, p.g, p.omega0,
                             p.boundary == spinotto::Boundary::open ? SPINOTTO_BOUNDARY_OPEN
                                                                    : SPINOTTO_BOUNDARY_PERIODIC};
  return SPINOTTO_OK;
}

spinotto_status spinotto_chain_couplings(const spinotto_chain* chain, double* out,
                                         size_t capacity) {
  if (!chain || !out) return null_pointer();
  const auto n = static_cast<std::size_t>(chain->params.n);
  if (capacity < n * n) return too_small(n * n);
  return guarded([&] {
    const spinotto::CouplingMatrix j = spinotto::coupling_matrix(chain->params);
    for (std::size_t a = 0; a < n; ++a)
      for (std::size_t b = 0; b < n; ++b)
        out[a * n + b] = j(static_cast<int>(a), static_cast<int>(b));
  });
}

spinotto_status spinotto_spectrum(const spinotto_chain* chain, double omega, double* energies,
                                  size_t capacity, size_t* count) {
  if (!chain || !count) return null_pointer();
  const std::size_t need = std::size_t{1} << chain->params.n;
  if (!energies || capacity < need) {
    *count = need;
    return too_small(need);
  }
  return guarded([&] {
    const spinotto::Spectrum s = spinotto::chain_spectrum(chain->params, omega, false);
    for (std::size_t k = 0; k < need; ++k) energies[k] = s.energies(static_cast<Eigen::Index>(k));
    *count = need;
  });
}

spinotto_status spinotto_energy_gap(const spinotto_chain* chain, double omega, double* gap) {
  if (!chain || !gap) return null_pointer();
  return guarded([&] { *gap = spinotto::energy_gap(chain->params, omega); });
}

spinotto_status spinotto_gap_curve(const spinotto_chain* chain, double omega0,
                                   const double* g_grid, size_t len, double* gaps,
                                   double* second_difference) {
  if (!chain || !g_grid || !gaps) return null_pointer();
  return guarded([&] {
    const std::vector<double> grid(g_grid, g_grid + len);
    const spinotto::GapCurve curve = spinotto::gap_curve(chain->params, omega0, grid);
    std::copy(curve.gaps.begin(), curve.gaps.end(), gaps);
    if (second_difference) {
      const std::vector<double> d2 = spinotto::second_difference(curve);
      std::copy(d2.begin(), d2.end(), second_difference);
    }
  });
}

spinotto_status spinotto_critical_coupling(const spinotto_chain* chain, double step, double* g_c) {
  if (!chain || !g_c) return null_pointer();
  return guarded([&] { *g_c = spinotto::critical_coupling(chain->params, step); });
}

spinotto_status spinotto_critical_coupling_grid(const spinotto_chain* chain, const double* g_grid,
                                                size_t len, double* g_c) {
  if (!chain || !g_grid || !g_c) return null_pointer();
  return guarded([&] {
    const std::vector<double> grid(g_grid, g_grid + len);
    *g_c = spinotto::critical_coupling(chain->params, chain->params.omega0, grid);
  });
}

spinotto_status spinotto_occupation_bands(const spinotto_chain* chain, double omega, double beta,
                                          spinotto_bands* out) {
  if (!chain || !out) return null_pointer();
  return guarded([&] {
    const spinotto::Spectrum s = spinotto::chain_spectrum(chain->params, omega, false);
    const spinotto::OccupationBands b =
        spinotto::occupation_bands(spinotto::level_occupations(s, beta), chain->params.n);
    *out = spinotto_bands{b.ground, b.first, b.low_band, b.high_band};
  });
}

spinotto_status spinotto_ln_partition(const spinotto_chain* chain, double omega, double beta,
                                      int ground_zero, double* out) {
  if (!chain || !out) return null_pointer();
  return guarded([&] {
    const spinotto::Spectrum s = spinotto::chain_spectrum(chain->params, omega, false);
    *out = spinotto::ln_partition(s, beta,
                                  ground_zero ? spinotto::EnergyFrame::ground_zero
                                              : spinotto::EnergyFrame::absolute);
  });
}

void spinotto_cycle_params_init(spinotto_cycle_params* params) {
  if (!params) return;
  *params = spinotto_cycle_params{1.1, 10.0, 20.0, 100.0, SPINOTTO_MODE_ADIABATIC,
                                  SPINOTTO_CD_FULL, 0};
}

spinotto_status spinotto_run_cycle(const spinotto_chain* chain, const spinotto_cycle_params* params,
                                   spinotto_performance* out) {
  if (!chain || !params || !out) return null_pointer();
  return guarded([&] {
    spinotto::CycleParams cyc;
    cyc.r = params->r;
    cyc.beta_h = params->beta_h;
    cyc.beta_c = params->beta_c;
    cyc.tau = params->tau;
    cyc.mode = to_mode(params->mode);
    cyc.cd_variant = to_variant(params->cd_variant);
    cyc.evolution.steps = params->steps;
    const spinotto::CyclePerformance p = spinotto::run_cycle(chain->params, cyc);
    *out = spinotto_performance{p.work,  p.heat_hot,    p.heat_cold,
                                p.efficiency, p.carnot, p.power,
                                p.is_engine ? 1 : 0,   p.efficiency_defined ? 1 : 0};
  });
}

spinotto_status spinotto_r_ni_max(double beta_h, double omega0, double* out) {
  if (!out) return null_pointer();
  return guarded([&] { *out = spinotto::r_ni_max(beta_h, omega0); });
}

spinotto_status spinotto_cd_coefficients(const spinotto_chain* chain, double omega,
                                         double omega_dot, spinotto_cd_variant variant, double* c,
                                         size_t capacity) {
  if (!chain || !c) return null_pointer();
  const auto n = static_cast<std::size_t>(chain->params.n);
  if (capacity < n * n) return too_small(n * n);
  return guarded([&] {
    const spinotto::CDCoefficients cd =
        spinotto::variational_coefficients(chain->params, omega, omega_dot, to_variant(variant));
    for (std::size_t a = 0; a < n; ++a)
      for (std::size_t b = 0; b < n; ++b)
        c[a * n + b] = cd.c(static_cast<Eigen::Index>(a), static_cast<Eigen::Index>(b));
  });
}

spinotto_status spinotto_cd_stationarity_residual(const spinotto_chain* chain, double omega,
                                                  double omega_dot, const double* c,
                                                  double* out) {
  if (!chain || !c || !out) return null_pointer();
  return guarded([&] {
    *out = spinotto::stationarity_residual(chain->params, omega, omega_dot,
                                           read_square(c, chain->params.n));
  });
}

spinotto_status spinotto_cd_action(const spinotto_chain* chain, double omega, double omega_dot,
                                   const double* c, double* out) {
  if (!chain || !c || !out) return null_pointer();
  return guarded([&] {
    *out = spinotto::chain_action(chain->params, omega, omega_dot, read_square(c, chain->params.n));
  });
}

spinotto_status spinotto_clausen(double p, double n, double theta, double* out) {
  if (!out) return null_pointer();
  return guarded([&] { *out = spinotto::clausen(p, n, theta); });
}

spinotto_status spinotto_tfim_free_energy(int n, double beta, double omega, double g,
                                          double* out) {
  if (!out) return null_pointer();
  return guarded([&] { *out = spinotto::tfim_free_energy(n, beta, omega, g); });
}

spinotto_status spinotto_tfim_cycle(int n, double beta_h, double beta_c, double r, double omega0,
                                    double g, spinotto_tfim_result* out) {
  if (!out) return null_pointer();
  return guarded([&] {
    const spinotto::TfimCycle t = spinotto::tfim_cycle(n, beta_h, beta_c, r, omega0, g);
    *out = spinotto_tfim_result{t.work, t.heat_hot, t.heat_cold, t.efficiency};
  });
}

spinotto_status spinotto_quadratic_free_energy(double p, int n, double beta, double omega,
                                               double g, spinotto_fluctuation form, double* out) {
  if (!out) return null_pointer();
  return guarded([&] {
    *out = spinotto::quadratic_free_energy(spinotto::QuadraticModel{p, n, beta, omega, g},
                                           to_form(form));
  });
}

spinotto_status spinotto_two_level_performance(double p, int n, double r, double beta_h,
                                               double beta_c, double omega0, double g, double g_c,
                                               spinotto_fluctuation form, double* work,
                                               double* efficiency) {
  if (!work || !efficiency) return null_pointer();
  return guarded([&] {
    const spinotto::TwoLevelPerformance t = spinotto::two_level_performance(
        p, n, r, beta_h, beta_c, omega0, g, g_c, to_form(form));
    *work = t.work;
    *efficiency = t.efficiency;
  });
}

spinotto_status spinotto_high_t_expansion(const spinotto_chain* chain, double beta, double omega,
                                          double* printed, double* cumulant) {
  if (!chain || !printed || !cumulant) return null_pointer();
  return guarded([&] {
    const spinotto::HighTemperatureExpansion h = spinotto::high_t_expansion(
        beta, omega, spinotto::coupling_matrix(chain->params), chain->params.g);
    *printed = h.printed;
    *cumulant = h.cumulant;
  });
}

spinotto_status spinotto_mean_field_free_energy(const spinotto_chain* chain, double beta,
                                                double omega, double* out) {
  if (!chain || !out) return null_pointer();
  return guarded([&] {
    *out = spinotto::mean_field_free_energy(beta, omega, spinotto::coupling_matrix(chain->params),
                                            chain->params.g);
  });
}

spinotto_status spinotto_p1_work_scaling(int n, double g, double beta_h, double r, double omega0,
                                         double* out) {
  if (!out) return null_pointer();
  return guarded([&] { *out = spinotto::p1_work_scaling(n, g, beta_h, r, omega0); });
}

spinotto_status spinotto_w_state_entropy(int n, double* out) {
  if (!out) return null_pointer();
  return guarded([&] {
    *out = spinotto::entanglement_entropy(spinotto::w_state(n), spinotto::Partition::half(n));
  });
}

spinotto_status spinotto_ppt_witness(int n, double beta, double delta, double alpha,
                                     double* closed_form, double* numeric) {
  if (!closed_form || !numeric) return null_pointer();
  return guarded([&] {
    const spinotto::WitnessValue w = spinotto::ppt_witness(n, beta, delta, alpha);
    *closed_form = w.closed_form;
    *numeric = w.numeric;
  });
}

spinotto_status spinotto_two_level_pt_min_eig(int n, double beta, double delta, double* out) {
  if (!out) return null_pointer();
  return guarded([&] {
    const spinotto::DensityMatrix rho = spinotto::two_level_thermal_state(
        n, beta, delta, spinotto::polarized_state(n), spinotto::w_state(n));
    *out = spinotto::partial_transpose_min_eig(rho, spinotto::Partition::half(n));
  });
}

spinotto_status spinotto_gibbs_pt_min_eig(const spinotto_chain* chain, double omega, double beta,
                                          double* out) {
  if (!chain || !out) return null_pointer();
  return guarded([&] {
    const spinotto::DensityMatrix rho = spinotto::chain_gibbs_state(chain->params, omega, beta);
    *out = spinotto::partial_transpose_min_eig(rho, spinotto::Partition::half(chain->params.n));
  });
}

}  // extern "C"
