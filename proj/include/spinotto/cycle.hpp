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
#include <vector>

#include "spinotto/counterdiabatic.hpp"
#include "spinotto/dynamics.hpp"
#include "spinotto/model.hpp"

namespace spinotto {

enum class StrokeMode { adiabatic, diabatic, diabatic_cd };

struct CycleParams {
  double r = 1.1;
  double beta_h = 10.0;
  double beta_c = 20.0;
  double tau = 100.0;
  StrokeMode mode = StrokeMode::adiabatic;
  CdVariant cd_variant = CdVariant::full;
  EvolutionConfig evolution{};  // include_cd and cd_variant are set from mode

  void validate() const;
};

struct CyclePerformance {
  double work = 0.0;       // W = Q_H − Q_C
  double heat_hot = 0.0;   // Q_H = Tr[H(rω0)(ρ_H − ρ_4)]
  double heat_cold = 0.0;  // Q_C = −Tr[H(ω0)(ρ_C − ρ_2)]
  double efficiency = 0.0;
  double carnot = 0.0;
  double power = 0.0;
  bool is_engine = false;
  bool efficiency_defined = false;  // false when Q_H ≤ 0; efficiency is then 0
  // Tr[H ρ] at points 1, 2, 3, 4 of the cycle
  double e_hot = 0.0;
  double e_2 = 0.0;
  double e_cold = 0.0;
  double e_4 = 0.0;
};

CyclePerformance run_cycle(const ChainParams& chain, const CycleParams& cyc);

/** Reference path on full 2^N matrices with gibbs_state and adiabatic_map. */
CyclePerformance run_cycle_dense(const ChainParams& chain, const CycleParams& cyc);

/** 1 + 1/(β_H ω0) */
double r_ni_max(double beta_h, double omega0);

/** P = W/(2τ) */
double power(const CyclePerformance& perf, double tau);

struct CompressionSweep {
  std::vector<double> r_grid;
  std::vector<CyclePerformance> rows;
  std::optional<double> r_prime;  // largest grid r with is_engine
};

CompressionSweep compression_sweep(const ChainParams& chain, const CycleParams& cyc,
                                   const std::vector<double>& r_grid);

}  // namespace spinotto
