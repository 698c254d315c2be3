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
#include "spinotto/spectral.hpp"

namespace spinotto {

class DensityMatrix {
 public:
  enum class Check {
    full,       // Hermitian, unit trace, PSD (eigenvalues in [−1e−10, 0) clipped)
    structure,  // Hermitian and unit trace only
  };

  explicit DensityMatrix(Eigen::MatrixXcd rho, Check check = Check::full);

  [[nodiscard]] const Eigen::MatrixXcd& matrix() const { return rho_; }
  [[nodiscard]] Eigen::Index dim() const { return rho_.rows(); }
  [[nodiscard]] double trace() const { return rho_.trace().real(); }
  [[nodiscard]] double purity() const;
  [[nodiscard]] Eigen::VectorXd eigenvalues() const;

 private:
  Eigen::MatrixXcd rho_;
};

DensityMatrix gibbs_state(const HermitianOperator& h, double beta);
DensityMatrix gibbs_state(const Spectrum& spectrum, double beta);

/** Gibbs state of H(ω) built per parity sector. */
DensityMatrix chain_gibbs_state(const ChainParams& params, double omega, double beta);

enum class EnergyFrame { absolute, ground_zero };

double ln_partition(const Eigen::VectorXd& energies, double beta, EnergyFrame frame);
double ln_partition(const Spectrum& spectrum, double beta, EnergyFrame frame);

/** Re Tr(ρH); throws if the imaginary residue exceeds 1e−10. */
double energy_expectation(const DensityMatrix& rho, const HermitianOperator& h);

/** ½‖ρ − σ‖₁ */
double trace_distance(const DensityMatrix& rho, const DensityMatrix& sigma);

}  // namespace spinotto
