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

#include "spinotto/thermal.hpp"

#include <sstream>

#include "block_spectrum.hpp"
#include "spinotto/error.hpp"

namespace spinotto {

namespace {

constexpr double kHermitianTolerance = 1e-12;
constexpr double kTraceTolerance = 1e-12;
constexpr double kPsdTolerance = 1e-10;

}  // namespace

DensityMatrix::DensityMatrix(Eigen::MatrixXcd rho, Check check) : rho_(std::move(rho)) {
  require(rho_.rows() == rho_.cols() && rho_.rows() > 0, "density matrix must be square");
  const double herm = (rho_ - rho_.adjoint()).cwiseAbs().maxCoeff();
  if (!(herm <= kHermitianTolerance)) {
    std::ostringstream msg;
    msg << "density matrix is not Hermitian (max |rho - rho^H| = " << herm << ")";
    fail(ErrorKind::numerical, msg.str());
  }
  const double tr = rho_.trace().real();
  if (!(std::abs(tr - 1.0) <= kTraceTolerance)) {
    std::ostringstream msg;
    msg << "density matrix trace is " << tr << ", expected 1";
    fail(ErrorKind::numerical, msg.str());
  }
  if (check == Check::structure) return;

  const Eigen::MatrixXcd herm_part = 0.5 * (rho_ + rho_.adjoint());
  Eigen::SelfAdjointEigenSolver<Eigen::MatrixXcd> es(herm_part);
  if (es.info() != Eigen::Success) fail(ErrorKind::numerical, "density matrix eigensolver failed");
  const double lowest = es.eigenvalues().minCoeff();
  if (lowest < -kPsdTolerance) {
    std::ostringstream msg;
    msg << "density matrix is not positive semidefinite (min eigenvalue " << lowest << ")";
    fail(ErrorKind::numerical, msg.str());
  }
  if (lowest < 0.0) {
    const Eigen::VectorXd clipped = es.eigenvalues().cwiseMax(0.0);
    rho_ = es.eigenvectors() * clipped.cast<cplx>().asDiagonal() * es.eigenvectors().adjoint();
  }
}

double DensityMatrix::purity() const {
  // Tr ρ² = Σ_ij |ρ_ij|² for Hermitian ρ
  return rho_.squaredNorm();
}

Eigen::VectorXd DensityMatrix::eigenvalues() const {
  Eigen::SelfAdjointEigenSolver<Eigen::MatrixXcd> es(rho_, Eigen::EigenvaluesOnly);
  return es.eigenvalues();
}

DensityMatrix gibbs_state(const Spectrum& spectrum, double beta) {
  require(spectrum.has_vectors(), "gibbs_state: spectrum lacks eigenvectors");
  const Eigen::VectorXd occ = level_occupations(spectrum.energies, beta);
  Eigen::MatrixXcd rho = spectrum.vectors * occ.cast<cplx>().asDiagonal() * spectrum.vectors.adjoint();
  rho = 0.5 * (rho + rho.adjoint()).eval();
  rho /= rho.trace().real();
  return DensityMatrix(std::move(rho), DensityMatrix::Check::structure);
}

DensityMatrix gibbs_state(const HermitianOperator& h, double beta) {
  return gibbs_state(diagonalize(h), beta);
}

DensityMatrix chain_gibbs_state(const ChainParams& params, double omega, double beta) {
  const detail::ParityBasis basis(params.n);
  const detail::BlockSpectrum bs = detail::block_spectrum(basis, params, omega, true);
  const double e0 = bs.merged(0);
  double z = 0.0;
  std::array<Eigen::VectorXd, 2> w;
  for (int parity = 0; parity < 2; ++parity) {
    w[parity] = (-beta * (bs.energies[parity].array() - e0)).exp().matrix();
    z += w[parity].sum();
  }
  detail::BlockDensity blocks;
  for (int parity = 0; parity < 2; ++parity) {
    const Eigen::MatrixXd& v = bs.vectors[parity];
    const Eigen::MatrixXd r = v * (w[parity] / z).asDiagonal() * v.transpose();
    blocks.diag[parity] = (0.5 * (r + r.transpose())).cast<cplx>();
  }
  return DensityMatrix(blocks.to_full(basis), DensityMatrix::Check::structure);
}

double ln_partition(const Eigen::VectorXd& energies, double beta, EnergyFrame frame) {
  require(beta >= 0.0 && std::isfinite(beta), "ln_partition: beta must be non-negative");
  require(energies.size() > 0, "ln_partition: empty spectrum");
  const double e0 = energies.minCoeff();
  const double shifted = std::log((-beta * (energies.array() - e0)).exp().sum());
  return frame == EnergyFrame::ground_zero ? shifted : shifted - beta * e0;
}

double ln_partition(const Spectrum& spectrum, double beta, EnergyFrame frame) {
  return ln_partition(spectrum.energies, beta, frame);
}

double energy_expectation(const DensityMatrix& rho, const HermitianOperator& h) {
  if (rho.dim() != h.dim())
    fail(ErrorKind::dimension, "energy_expectation: dimension mismatch");
  // Tr(ρH) = Σ_ij ρ_ij H_ji
  const cplx tr = (rho.matrix().transpose().array() * h.matrix().array()).sum();
  if (std::abs(tr.imag()) > 1e-10 * std::max(1.0, std::abs(tr.real()))) {
    std::ostringstream msg;
    msg << "energy_expectation: imaginary residue " << tr.imag();
    fail(ErrorKind::numerical, msg.str());
  }
  return tr.real();
}

double trace_distance(const DensityMatrix& rho, const DensityMatrix& sigma) {
  if (rho.dim() != sigma.dim()) fail(ErrorKind::dimension, "trace_distance: dimension mismatch");
  const Eigen::MatrixXcd d = rho.matrix() - sigma.matrix();
  Eigen::SelfAdjointEigenSolver<Eigen::MatrixXcd> es(0.5 * (d + d.adjoint()),
                                                      Eigen::EigenvaluesOnly);
  return 0.5 * es.eigenvalues().cwiseAbs().sum();
}

}  // namespace spinotto
