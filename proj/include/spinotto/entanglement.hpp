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

#include <Eigen/Dense>
#include <vector>

#include "spinotto/thermal.hpp"

namespace spinotto {

struct Partition {
  std::vector<int> left;
  std::vector<int> right;

  /** First N/2 sites vs the rest. */
  static Partition half(int n);
  void validate(int n) const;
};

/** All spins up (σ_z = +1/2): the g → 0 ground state of −ωΣσ_z. */
Eigen::VectorXcd polarized_state(int n);

/** Σ_i σ_+^i |polarized⟩ / √N, σ_+ flipping one spin out of the polarized state. */
Eigen::VectorXcd w_state(int n);

/** Squared Schmidt coefficients across the partition, descending. */
Eigen::VectorXd schmidt_weights(const Eigen::VectorXcd& psi, const Partition& part);

double entanglement_entropy(const Eigen::VectorXcd& psi, const Partition& part);

/** (|g⟩⟨g| + e^{−βΔ}|e⟩⟨e|)/(1 + e^{−βΔ}) */
DensityMatrix two_level_thermal_state(int n, double beta, double delta,
                                      const Eigen::VectorXcd& ground,
                                      const Eigen::VectorXcd& excited);

struct WitnessValue {
  double closed_form = 0.0;  // (1 − αe^{−βΔ}) / ((1 + α)(1 + e^{−βΔ}))
  double numeric = 0.0;      // Tr(M⊗M ρ) on the polarized/W two-level state
};

/**
 * M⊗M = Π_i m_i with m_i = (1+α)^{−1/N}[P_i − αQ_i], where P_i projects
 * spin i onto its polarized value and Q_i = 1 − P_i.
 */
WitnessValue ppt_witness(int n, double beta, double delta, double alpha);

/** Smallest eigenvalue of ρ with the right partition transposed; dim ≤ 2^12. */
double partial_transpose_min_eig(const DensityMatrix& rho, const Partition& part);

}  // namespace spinotto
