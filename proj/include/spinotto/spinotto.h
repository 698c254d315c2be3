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

#ifndef SPINOTTO_SPINOTTO_H
#define SPINOTTO_SPINOTTO_H

/*
 * C interface to the spinotto core.
 *
 * Every function returns a spinotto_status; on failure the thread-local
 * message from spinotto_last_error() describes the cause. Output pointers
 * are written only on success (spinotto_spectrum also reports its required
 * count on BUFFER_TOO_SMALL). Handles are immutable once created and may
 * be shared between threads.
 */

#include <stddef.h>

#if defined(_WIN32)
#if defined(SPINOTTO_BUILDING_LIBRARY)
#define SPINOTTO_API __declspec(dllexport)
#else
#define SPINOTTO_API __declspec(dllimport)
#endif
#else
#define SPINOTTO_API __attribute__((visibility("default")))
#endif

#ifdef __cplusplus
extern "C" {
#endif

typedef enum spinotto_status {
  SPINOTTO_OK = 0,
  SPINOTTO_ERR_INVALID_ARGUMENT = 1,
  SPINOTTO_ERR_DIMENSION = 2,
  SPINOTTO_ERR_NUMERICAL = 3,
  SPINOTTO_ERR_GRID = 4,
  SPINOTTO_ERR_CONVERGENCE = 5,
  SPINOTTO_ERR_NULL_POINTER = 6,
  SPINOTTO_ERR_BUFFER_TOO_SMALL = 7,
  SPINOTTO_ERR_INTERNAL = 8
} spinotto_status;

typedef enum spinotto_boundary {
  SPINOTTO_BOUNDARY_OPEN = 0,
  SPINOTTO_BOUNDARY_PERIODIC = 1
} spinotto_boundary;

typedef enum spinotto_mode {
  SPINOTTO_MODE_ADIABATIC = 0,
  SPINOTTO_MODE_DIABATIC = 1,
  SPINOTTO_MODE_DIABATIC_CD = 2
} spinotto_mode;

typedef enum spinotto_cd_variant {
  SPINOTTO_CD_FULL = 0,
  SPINOTTO_CD_CHI_ONE = 1,
  SPINOTTO_CD_ACTION_MINIMUM = 2
} spinotto_cd_variant;

typedef enum spinotto_fluctuation {
  SPINOTTO_FLUCTUATION_EXACT = 0,
  SPINOTTO_FLUCTUATION_ASYMPTOTIC = 1
} spinotto_fluctuation;

/* Opaque chain description: N, p, g, omega0, boundary. */
typedef struct spinotto_chain spinotto_chain;

typedef struct spinotto_chain_info {
  int n;
  double p; /* +inf for nearest-neighbour couplings */
  double g;
  double omega0;
  spinotto_boundary boundary;
} spinotto_chain_info;

typedef struct spinotto_cycle_params {
  double r;
  double beta_h;
  double beta_c;
  double tau;
  spinotto_mode mode;
  spinotto_cd_variant cd_variant;
  int steps; /* 0 selects the step count automatically */
} spinotto_cycle_params;

typedef struct spinotto_performance {
  double work;
  double heat_hot;
  double heat_cold;
  double efficiency; /* 0 when efficiency_defined is 0 */
  double carnot;
  double power;
  int is_engine;
  int efficiency_defined;
} spinotto_performance;

typedef struct spinotto_bands {
  double ground;
  double first;
  double low_band;
  double high_band;
} spinotto_bands;

typedef struct spinotto_tfim_result {
  double work;
  double heat_hot;
  double heat_cold;
  double efficiency;
} spinotto_tfim_result;

SPINOTTO_API const char* spinotto_version(void);
SPINOTTO_API const char* spinotto_last_error(void);
SPINOTTO_API const char* spinotto_status_string(spinotto_status status);
SPINOTTO_API double spinotto_infinity(void);
SPINOTTO_API int spinotto_max_sites(void);

/* Chain handles */
SPINOTTO_API spinotto_status spinotto_chain_create(int n, double p, double g, double omega0,
                                                   spinotto_boundary boundary,
                                                   spinotto_chain** out);
SPINOTTO_API spinotto_status spinotto_chain_with_coupling(const spinotto_chain* chain, double g,
                                                          spinotto_chain** out);
SPINOTTO_API void spinotto_chain_destroy(spinotto_chain* chain);
SPINOTTO_API spinotto_status spinotto_chain_get_info(const spinotto_chain* chain,
                                                     spinotto_chain_info* out);
/* Row-major N x N coupling matrix. */
SPINOTTO_API spinotto_status spinotto_chain_couplings(const spinotto_chain* chain, double* out,
                                                      size_t capacity);

/* Spectra. Energies ascending; with too small a buffer (or NULL energies)
 * the call fails with BUFFER_TOO_SMALL and still writes 2^N to *count. */
SPINOTTO_API spinotto_status spinotto_spectrum(const spinotto_chain* chain, double omega,
                                               double* energies, size_t capacity,
                                               size_t* count);
SPINOTTO_API spinotto_status spinotto_energy_gap(const spinotto_chain* chain, double omega,
                                                 double* gap);
/* second_difference may be NULL; otherwise it receives len - 2 values. */
SPINOTTO_API spinotto_status spinotto_gap_curve(const spinotto_chain* chain, double omega0,
                                                const double* g_grid, size_t len, double* gaps,
                                                double* second_difference);
SPINOTTO_API spinotto_status spinotto_critical_coupling(const spinotto_chain* chain, double step,
                                                        double* g_c);
SPINOTTO_API spinotto_status spinotto_critical_coupling_grid(const spinotto_chain* chain,
                                                             const double* g_grid, size_t len,
                                                             double* g_c);
SPINOTTO_API spinotto_status spinotto_occupation_bands(const spinotto_chain* chain, double omega,
                                                       double beta, spinotto_bands* out);
SPINOTTO_API spinotto_status spinotto_ln_partition(const spinotto_chain* chain, double omega,
                                                   double beta, int ground_zero, double* out);

/* Cycle */
SPINOTTO_API void spinotto_cycle_params_init(spinotto_cycle_params* params);
SPINOTTO_API spinotto_status spinotto_run_cycle(const spinotto_chain* chain,
                                                const spinotto_cycle_params* params,
                                                spinotto_performance* out);
SPINOTTO_API spinotto_status spinotto_r_ni_max(double beta_h, double omega0, double* out);

/* Counterdiabatic drive; coefficient buffers are row-major N x N. */
SPINOTTO_API spinotto_status spinotto_cd_coefficients(const spinotto_chain* chain, double omega,
                                                      double omega_dot,
                                                      spinotto_cd_variant variant, double* c,
                                                      size_t capacity);
SPINOTTO_API spinotto_status spinotto_cd_stationarity_residual(const spinotto_chain* chain,
                                                               double omega, double omega_dot,
                                                               const double* c, double* out);
SPINOTTO_API spinotto_status spinotto_cd_action(const spinotto_chain* chain, double omega,
                                                double omega_dot, const double* c, double* out);

/* Analytic estimates */
SPINOTTO_API spinotto_status spinotto_clausen(double p, double n, double theta, double* out);
SPINOTTO_API spinotto_status spinotto_tfim_free_energy(int n, double beta, double omega, double g,
                                                       double* out);
SPINOTTO_API spinotto_status spinotto_tfim_cycle(int n, double beta_h, double beta_c, double r,
                                                 double omega0, double g,
                                                 spinotto_tfim_result* out);
SPINOTTO_API spinotto_status spinotto_quadratic_free_energy(double p, int n, double beta,
                                                            double omega, double g,
                                                            spinotto_fluctuation form,
                                                            double* out);
SPINOTTO_API spinotto_status spinotto_two_level_performance(double p, int n, double r,
                                                            double beta_h, double beta_c,
                                                            double omega0, double g, double g_c,
                                                            spinotto_fluctuation form,
                                                            double* work, double* efficiency);
SPINOTTO_API spinotto_status spinotto_high_t_expansion(const spinotto_chain* chain, double beta,
                                                       double omega, double* printed,
                                                       double* cumulant);
SPINOTTO_API spinotto_status spinotto_mean_field_free_energy(const spinotto_chain* chain,
                                                             double beta, double omega,
                                                             double* out);
SPINOTTO_API spinotto_status spinotto_p1_work_scaling(int n, double g, double beta_h, double r,
                                                      double omega0, double* out);

/* Entanglement */
SPINOTTO_API spinotto_status spinotto_w_state_entropy(int n, double* out);
SPINOTTO_API spinotto_status spinotto_ppt_witness(int n, double beta, double delta, double alpha,
                                                  double* closed_form, double* numeric);
SPINOTTO_API spinotto_status spinotto_two_level_pt_min_eig(int n, double beta, double delta,
                                                           double* out);
SPINOTTO_API spinotto_status spinotto_gibbs_pt_min_eig(const spinotto_chain* chain, double omega,
                                                       double beta, double* out);

#ifdef __cplusplus
}
#endif

#endif /* SPINOTTO_SPINOTTO_H */
