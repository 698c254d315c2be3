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

#include "spinotto/model.hpp"

namespace spinotto {

/**
 * Generalized Clausen function C_p^N(θ) = Σ_{m=1}^N cos(mθ)/m^p.
 * n may be kInfiniteRange; p = kInfiniteRange keeps only the m = 1 term.
 */
double clausen(double p, double n, double theta);

/** (N/π) ∫_0^π e^{−βε(θ)} dθ with ε(θ) = √(ω² + g² − 2ωg cos θ); ground-zero frame. */
double tfim_free_energy(int n, double beta, double omega, double g);

struct TfimCycle {
  double work = 0.0;
  double heat_hot = 0.0;
  double heat_cold = 0.0;
  double efficiency = 0.0;
  double e1 = 0.0, e2 = 0.0, e3 = 0.0, e4 = 0.0;
};

/** Quasiparticle estimate of the adiabatic cycle energies at its four points. */
TfimCycle tfim_cycle(int n, double beta_h, double beta_c, double r, double omega0, double g);

struct QuadraticModel {
  double p = kInfiniteRange;
  int n = 10;
  double beta = 10.0;
  double omega = 1.0;
  double g = 0.0;
};

enum class FluctuationForm {
  exact,       // Bessel (p = ∞), Dawson (p = 2), erf (p = 3) forms
  asymptotic,  // large βg limits
};

/** ω − gζ(p) for finite p > 1, ω − g for p = ∞, ω − g(ln N + γ) for p = 1. */
double gap_approx(const QuadraticModel& model);

/** G_p(x), x = βg, normalized so that ln Z = N G_p e^{−βΔ}. */
double fluctuation_factor(double p, double x, FluctuationForm form);

double quadratic_free_energy(const QuadraticModel& model,
                             FluctuationForm form = FluctuationForm::asymptotic);

struct TwoLevelPerformance {
  double work = 0.0;
  double efficiency = 0.0;
};

/**
 * W = N(r−1)ω0 G_p(β_H g)(e^{−β_H Δ(rω0)} − e^{−β_C Δ(ω0)}), η = 1 − Δ(ω0)/Δ(rω0),
 * with Δ(ω) = ω − ω0 g/g_c.
 */
TwoLevelPerformance two_level_performance(double p, int n, double r, double beta_h, double beta_c,
                                          double omega0, double g, double g_c,
                                          FluctuationForm form = FluctuationForm::exact);

struct HighTemperatureExpansion {
  double printed = 0.0;   // ln Z_∞ + β²ω²/4 + β²g² Σ_i Ω_i′²/4
  double cumulant = 0.0;  // ln Z_∞ + β² Tr(H²) / (2·2^N)
};

HighTemperatureExpansion high_t_expansion(double beta, double omega, const CouplingMatrix& j,
                                          double g);

/** Σ_i ln[2 cosh(β√(ω² + g²Ω_i′²)/2)], Ω_i′ = ½ Σ_{j≠i} J_ij. */
double mean_field_free_energy(double beta, double omega, const CouplingMatrix& j, double g);

/** ω0(r−1) e^{−β_H ω0} e^{β_H g γ} N^{1+β_H g} */
double p1_work_scaling(int n, double g, double beta_h, double r, double omega0);

}  // namespace spinotto
