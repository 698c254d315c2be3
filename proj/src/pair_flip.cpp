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

#include "pair_flip.hpp"

#include <bit>

#include "spinotto/error.hpp"

namespace spinotto::detail {

ParityBasis::ParityBasis(int n) : n_(n), half_(Eigen::Index{1} << (n - 1)) {
  require(n >= 1 && n <= 30, "parity basis: site count out of range");
  for (int parity = 0; parity < 2; ++parity) {
    auto& s = states_[parity];
    s.resize(static_cast<std::size_t>(half_));
    mz_[parity].resize(half_);
    for (Eigen::Index k = 0; k < half_; ++k) {
      const auto hi = static_cast<std::uint32_t>(k) << 1;
      const std::uint32_t low = (std::popcount(hi) & 1) ^ static_cast<std::uint32_t>(parity);
      const std::uint32_t x = hi | low;
      s[static_cast<std::size_t>(k)] = x;
      mz_[parity](k) = 0.5 * n - std::popcount(x);
    }
  }
}

PairFlipOperator::PairFlipOperator(const ParityBasis& basis, double omega, double g,
                                   const Eigen::MatrixXd& j, const Eigen::MatrixXd* cd)
    : basis_(&basis), omega_(omega) {
  const int n = basis.num_sites();
  for (int a = 0; a < n; ++a) {
    for (int b = a + 1; b < n; ++b) {
      const double xx = -0.5 * g * j(a, b);
      const double cab = cd ? (*cd)(a, b) : 0.0;
      const double cba = cd ? (*cd)(b, a) : 0.0;
      if (xx == 0.0 && cab == 0.0 && cba == 0.0) continue;
      PairTerm t;
      t.a = a;
      t.b = b;
      t.mask = (1u << a) | (1u << b);
      for (int ba = 0; ba < 2; ++ba) {
        for (int bb = 0; bb < 2; ++bb) {
          // S_x^a S_y^b |x⟩ = (i/4)(1 − 2 b_b) |x^mask⟩
          const double im = 0.25 * (cab * (1 - 2 * bb) + cba * (1 - 2 * ba));
          t.amp[static_cast<std::size_t>(2 * ba + bb)] = cplx(xx, im);
        }
      }
      terms_.push_back(t);
    }
  }
}

void PairFlipOperator::apply(int parity, const RowMatrix& x, RowMatrix& out) const {
  const Eigen::VectorXd& mz = basis_->magnetization(parity);
  const Eigen::Index dim = basis_->block_dim();
  out.resize(dim, x.cols());
  for (Eigen::Index k = 0; k < dim; ++k) {
    const std::uint32_t y = basis_->state(parity, k);
    out.row(k) = (-omega_ * mz(k)) * x.row(k);
    for (const PairTerm& t : terms_) {
      const std::uint32_t src = y ^ t.mask;
      const unsigned idx = 2u * ((src >> t.a) & 1u) + ((src >> t.b) & 1u);
      out.row(k) += t.amp[idx] * x.row(src >> 1);
    }
  }
}

Eigen::MatrixXcd PairFlipOperator::dense_block(int parity) const {
  const Eigen::Index dim = basis_->block_dim();
  Eigen::MatrixXcd m = Eigen::MatrixXcd::Zero(dim, dim);
  const Eigen::VectorXd& mz = basis_->magnetization(parity);
  for (Eigen::Index k = 0; k < dim; ++k) {
    const std::uint32_t y = basis_->state(parity, k);
    m(k, k) = -omega_ * mz(k);
    for (const PairTerm& t : terms_) {
      const std::uint32_t src = y ^ t.mask;
      const unsigned idx = 2u * ((src >> t.a) & 1u) + ((src >> t.b) & 1u);
      m(k, src >> 1) += t.amp[idx];
    }
  }
  return m;
}

Eigen::MatrixXcd PairFlipOperator::dense() const {
  const Eigen::Index full = basis_->full_dim();
  Eigen::MatrixXcd m = Eigen::MatrixXcd::Zero(full, full);
  for (int parity = 0; parity < 2; ++parity) {
    const Eigen::MatrixXcd blk = dense_block(parity);
    for (Eigen::Index r = 0; r < blk.rows(); ++r)
      for (Eigen::Index c = 0; c < blk.cols(); ++c)
        m(basis_->state(parity, r), basis_->state(parity, c)) = blk(r, c);
  }
  return m;
}

BlockDensity BlockDensity::from_full(const ParityBasis& basis, const Eigen::MatrixXcd& rho,
                                     double off_tolerance) {
  const Eigen::Index dim = basis.block_dim();
  BlockDensity out;
  for (int parity = 0; parity < 2; ++parity) {
    out.diag[parity].resize(dim, dim);
    for (Eigen::Index r = 0; r < dim; ++r)
      for (Eigen::Index c = 0; c < dim; ++c)
        out.diag[parity](r, c) = rho(basis.state(parity, r), basis.state(parity, c));
  }
  out.off.resize(dim, dim);
  double largest = 0.0;
  for (Eigen::Index r = 0; r < dim; ++r) {
    for (Eigen::Index c = 0; c < dim; ++c) {
      out.off(r, c) = rho(basis.state(0, r), basis.state(1, c));
      largest = std::max(largest, std::abs(out.off(r, c)));
    }
  }
  out.has_off = largest > off_tolerance;
  if (!out.has_off) out.off.setZero();
  return out;
}

Eigen::MatrixXcd BlockDensity::to_full(const ParityBasis& basis) const {
  const Eigen::Index dim = basis.block_dim();
  Eigen::MatrixXcd rho = Eigen::MatrixXcd::Zero(basis.full_dim(), basis.full_dim());
  for (int parity = 0; parity < 2; ++parity)
    for (Eigen::Index r = 0; r < dim; ++r)
      for (Eigen::Index c = 0; c < dim; ++c)
        rho(basis.state(parity, r), basis.state(parity, c)) = diag[parity](r, c);
  if (has_off) {
    for (Eigen::Index r = 0; r < dim; ++r) {
      for (Eigen::Index c = 0; c < dim; ++c) {
        rho(basis.state(0, r), basis.state(1, c)) = off(r, c);
        rho(basis.state(1, c), basis.state(0, r)) = std::conj(off(r, c));
      }
    }
  }
  return rho;
}

Eigen::MatrixXcd embed_block_columns(const ParityBasis& basis, int parity,
                                     const Eigen::MatrixXcd& columns) {
  Eigen::MatrixXcd out = Eigen::MatrixXcd::Zero(basis.full_dim(), columns.cols());
  for (Eigen::Index r = 0; r < columns.rows(); ++r) out.row(basis.state(parity, r)) = columns.row(r);
  return out;
}

}  // namespace spinotto::detail
