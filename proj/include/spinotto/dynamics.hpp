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

#include "spinotto/counterdiabatic.hpp"
#include "spinotto/model.hpp"
#include "spinotto/thermal.hpp"

namespace spinotto {

struct EvolutionConfig {
  int steps = 0;  // 0 picks the smallest count meeting the step bound
  bool include_cd = false;
  CdVariant cd_variant = CdVariant::full;
  int convergence_refinements = 8;
  double max_step_phase = 0.05;  // bound on dt·max(rω0, g·max_i Σ_j J_ij)
  double invariant_tolerance = 1e-9;  // allowed drift of Tr ρ and Tr ρ² per stroke

  void validate() const;
};

struct EvolutionReport {
  int steps = 0;
  double dt = 0.0;
  double step_phase = 0.0;
  int doublings = 0;  // extra halvings of dt forced by invariant drift
  double trace_drift = 0.0;
  double purity_drift = 0.0;
};

/** dt·max(rω0, g·max_i Σ_j J_ij) */
double step_phase(const ChainParams& params, const DriveProtocol& protocol, double dt);

/** Step count used by evolve; throws if the bound cannot be met within the refinements. */
int resolve_steps(const ChainParams& params, const DriveProtocol& protocol,
                  const EvolutionConfig& cfg);

/**
 * ρ(τ) for ρ̇ = −i[H(t) (+ H_cd(t)), ρ] with ω(t) = ω0·f(t), integrated with
 * classical RK4 on the parity blocks of ρ. The step is halved until the drift
 * of Tr ρ and Tr ρ² stays within invariant_tolerance, at most
 * convergence_refinements times.
 */
DensityMatrix evolve(const DensityMatrix& rho0, const ChainParams& params,
                     const DriveProtocol& protocol, const EvolutionConfig& cfg,
                     EvolutionReport* report = nullptr);

/**
 * Moves the population of the k-th ascending eigenvector of h_init onto the
 * k-th ascending eigenvector of h_final. Degenerate levels pair by sorted index.
 */
DensityMatrix adiabatic_map(const DensityMatrix& rho0, const HermitianOperator& h_init,
                            const HermitianOperator& h_final);

}  // namespace spinotto
