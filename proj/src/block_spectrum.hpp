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
#include <array>

#include "pair_flip.hpp"
#include "spinotto/model.hpp"

namespace spinotto::detail {

/** Real-symmetric chain Hamiltonian diagonalized per parity sector. */
struct BlockSpectrum {
  std::array<Eigen::VectorXd, 2> energies;  // ascending within each sector
  std::array<Eigen::MatrixXd, 2> vectors;   // empty when values only
  Eigen::VectorXd merged;                   // all levels, ascending
};

Eigen::MatrixXd real_block(const ParityBasis& basis, const ChainParams& params, double omega,
                           int parity);

BlockSpectrum block_spectrum(const ParityBasis& basis, const ChainParams& params, double omega,
                             bool with_vectors);

}  // namespace spinotto::detail
