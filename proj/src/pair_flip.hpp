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

// Sparse action of chain Hamiltonians on parity blocks.
//
// Every operator built by this library flips spins in pairs, so the Z2
// parity Π_i σ_z^i is conserved. Basis index x is split into the block of
// parity popcount(x) mod 2; within a block, x sits at position x >> 1.

#include <Eigen/Dense>
#include <array>
#include <cstdint>
#include <vector>

#include "spinotto/model.hpp"

namespace spinotto::detail {

using RowMatrix = Eigen::Matrix<cplx, Eigen::Dynamic, Eigen::Dynamic, Eigen::RowMajor>;

class ParityBasis {
 public:
  explicit ParityBasis(int n);

  [[nodiscard]] int num_sites() const { return n_; }
  [[nodiscard]] Eigen::Index block_dim() const { return half_; }
  [[nodiscard]] Eigen::Index full_dim() const { return 2 * half_; }
  /** Product-basis index of position k in block `parity`. */
  [[nodiscard]] std::uint32_t state(int parity, Eigen::Index k) const {
    return states_[parity][static_cast<std::size_t>(k)];
  }
  /** N/2 − popcount(x) for position k, i.e. Σ σ_z. */
  [[nodiscard]] const Eigen::VectorXd& magnetization(int parity) const { return mz_[parity]; }

 private:
  int n_;
  Eigen::Index half_;
  std::array<std::vector<std::uint32_t>, 2> states_;
  std::array<Eigen::VectorXd, 2> mz_;
};

struct PairTerm {
  int a = 0;
  int b = 0;
  std::uint32_t mask = 0;
  // amplitude ⟨x^mask|O|x⟩ indexed by 2·bit_a(x) + bit_b(x)
  std::array<cplx, 4> amp{};
};

/**
 * O = −ω Σ σ_z + Σ_{a<b} (−g J_ab / 2)·X_a X_b + Σ_{a≠b} C_ab σ_x^a σ_y^b.
 * The chain Hamiltonian is the special case C = 0.
 */
class PairFlipOperator {
 public:
  PairFlipOperator(const ParityBasis& basis, double omega, double g, const Eigen::MatrixXd& j,
                   const Eigen::MatrixXd* cd = nullptr);

  /** out = O_block · x, with x holding rows of the given parity block. */
  void apply(int parity, const RowMatrix& x, RowMatrix& out) const;
  [[nodiscard]] Eigen::MatrixXcd dense_block(int parity) const;
  [[nodiscard]] Eigen::MatrixXcd dense() const;
  [[nodiscard]] const std::vector<PairTerm>& terms() const { return terms_; }

 private:
  const ParityBasis* basis_;
  double omega_;
  std::vector<PairTerm> terms_;
};

/** Density matrix split by parity; `off` is the (even rows, odd cols) block. */
struct BlockDensity {
  std::array<RowMatrix, 2> diag;
  RowMatrix off;
  bool has_off = false;

  static BlockDensity from_full(const ParityBasis& basis, const Eigen::MatrixXcd& rho,
                                double off_tolerance = 0.0);
  [[nodiscard]] Eigen::MatrixXcd to_full(const ParityBasis& basis) const;
};

/** Block matrix of eigenvectors of a parity block, embedded into the full basis. */
Eigen::MatrixXcd embed_block_columns(const ParityBasis& basis, int parity,
                                     const Eigen::MatrixXcd& columns);

}  // namespace spinotto::detail
