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

#include "spinotto/model.hpp"

namespace spinotto {

enum class CdVariant {
  full,            // exact χ: solution of the coupled stationarity equations
  chi_one,         // χ = 1: C_mn = −gω′J_mn/(2ω²)
  action_minimum,  // true minimizer of Tr G² over the σ_x σ_y pool
};

struct CDCoefficients {
  Eigen::MatrixXd c;  // C_mn multiplies σ_x^m σ_y^n; zero diagonal
  double omega = 0.0;
  double omega_dot = 0.0;
  double g = 0.0;
  double p = kInfiniteRange;
  int n = 0;
};

/**
 * Coefficients of H_cd = Σ_{m≠n} C_mn σ_x^m σ_y^n.
 *
 * For `full`, column n solves the stationarity system in closed form:
 * C_mn = −gω′J_mn / ((1 + f_n)(2ω² + g²[(J²)_nn/2 − J_mn²])),
 * f_n = Σ_m g²J_mn² / (2ω² + g²[(J²)_nn/2 − J_mn²]).
 */
CDCoefficients variational_coefficients(const ChainParams& params, double omega, double omega_dot,
                                        CdVariant variant);

/**
 * max_mn |gω′J_mn + 2ω²C_mn + g²(J_mn(JC)_nn + (J²)_nn C_mn/2 − J_mn² C_mn)|
 */
double stationarity_residual(const ChainParams& params, double omega, double omega_dot,
                             const Eigen::MatrixXd& c);

HermitianOperator cd_hamiltonian(const CDCoefficients& coeffs);

/** S = Tr G², G = ∂H/∂t + i[H_cd, H]. */
double action(const HermitianOperator& h, const HermitianOperator& dhdt,
              const HermitianOperator& hcd);

/** Same action for the chain Hamiltonian, evaluated in the Pauli basis. */
double chain_action(const ChainParams& params, double omega, double omega_dot,
                    const Eigen::MatrixXd& c);

}  // namespace spinotto
