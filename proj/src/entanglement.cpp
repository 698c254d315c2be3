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

#include "spinotto/entanglement.hpp"

#include <algorithm>
#include <bit>

#include "spinotto/error.hpp"

namespace spinotto {

namespace {

constexpr int kMaxPartialTransposeSites = 12;

int sites_of(Eigen::Index dim) {
  require(dim >= 2 && std::has_single_bit(static_cast<unsigned long long>(dim)),
          "state dimension must be a power of two");
  return std::countr_zero(static_cast<unsigned long long>(dim));
}

// basis index → (left index, right index) under the partition
std::pair<Eigen::Index, Eigen::Index> split(Eigen::Index x, const Partition& part) {
  Eigen::Index l = 0, r = 0;
  for (std::size_t k = 0; k < part.left.size(); ++k) l |= ((x >> part.left[k]) & 1) << k;
  for (std::size_t k = 0; k < part.right.size(); ++k) r |= ((x >> part.right[k]) & 1) << k;
  return {l, r};
}

Eigen::Index join(Eigen::Index l, Eigen::Index r, const Partition& part) {
  Eigen::Index x = 0;
  for (std::size_t k = 0; k < part.left.size(); ++k) x |= ((l >> k) & 1) << part.left[k];
  for (std::size_t k = 0; k < part.right.size(); ++k) x |= ((r >> k) & 1) << part.right[k];
  return x;
}

}  // namespace

Partition Partition::half(int n) {
  require(n >= 2, "Partition::half: need at least two sites");
  Partition p;
  for (int i = 0; i < n; ++i) (i < n / 2 ? p.left : p.right).push_back(i);
  return p;
}

void Partition::validate(int n) const {
  std::vector<int> all(left);
  all.insert(all.end(), right.begin(), right.end());
  std::sort(all.begin(), all.end());
  require(static_cast<int>(all.size()) == n, "partition must cover every site exactly once");
  for (int i = 0; i < n; ++i) require(all[static_cast<std::size_t>(i)] == i,
                                      "partition must cover every site exactly once");
}

Eigen::VectorXcd polarized_state(int n) {
  require(n >= 1 && n <= max_sites(), "polarized_state: N out of range");
  Eigen::VectorXcd psi = Eigen::VectorXcd::Zero(Eigen::Index{1} << n);
  psi(0) = 1.0;
  return psi;
}

Eigen::VectorXcd w_state(int n) {
  require(n >= 2 && n <= max_sites(), "w_state: N out of range");
  Eigen::VectorXcd psi = Eigen::VectorXcd::Zero(Eigen::Index{1} << n);
  const double amp = 1.0 / std::sqrt(static_cast<double>(n));
  for (int i = 0; i < n; ++i) psi(Eigen::Index{1} << i) = amp;
  return psi;
}

Eigen::VectorXd schmidt_weights(const Eigen::VectorXcd& psi, const Partition& part) {
  const int n = sites_of(psi.size());
  part.validate(n);
  const Eigen::Index dl = Eigen::Index{1} << part.left.size();
  const Eigen::Index dr = Eigen::Index{1} << part.right.size();
  Eigen::MatrixXcd m = Eigen::MatrixXcd::Zero(dl, dr);
  for (Eigen::Index x = 0; x < psi.size(); ++x) {
    const auto [l, r] = split(x, part);
    m(l, r) = psi(x);
  }
  Eigen::JacobiSVD<Eigen::MatrixXcd> svd(m);
  Eigen::VectorXd w = svd.singularValues().array().square().matrix();
  const double total = w.sum();
  require(total > 0.0, "schmidt_weights: zero state");
  return w / total;
}

double entanglement_entropy(const Eigen::VectorXcd& psi, const Partition& part) {
  const Eigen::VectorXd w = schmidt_weights(psi, part);
  double s = 0.0;
  for (Eigen::Index k = 0; k < w.size(); ++k)
    if (w(k) > 0.0) s -= w(k) * std::log(w(k));
  return s;
}

DensityMatrix two_level_thermal_state(int n, double beta, double delta,
                                      const Eigen::VectorXcd& ground,
                                      const Eigen::VectorXcd& excited) {
  const Eigen::Index dim = Eigen::Index{1} << n;
  require(ground.size() == dim && excited.size() == dim,
          "two_level_thermal_state: state dimension does not match N");
  require(std::abs(ground.norm() - 1.0) < 1e-10 && std::abs(excited.norm() - 1.0) < 1e-10,
          "two_level_thermal_state: states must be normalized");
  require(std::abs(ground.dot(excited)) < 1e-10,
          "two_level_thermal_state: ground and excited states must be orthogonal");
  require(beta >= 0.0, "two_level_thermal_state: beta must be non-negative");
  const double w = std::exp(-beta * delta);
  Eigen::MatrixXcd rho = (ground * ground.adjoint() + w * excited * excited.adjoint()) / (1.0 + w);
  rho = 0.5 * (rho + rho.adjoint()).eval();
  return DensityMatrix(std::move(rho), DensityMatrix::Check::structure);
}

WitnessValue ppt_witness(int n, double beta, double delta, double alpha) {
  require(alpha >= 0.0, "ppt_witness: alpha must be non-negative");
  const double w = std::exp(-beta * delta);
  WitnessValue out;
  out.closed_form = (1.0 - alpha * w) / ((1.0 + alpha) * (1.0 + w));

  const DensityMatrix rho = two_level_thermal_state(n, beta, delta, polarized_state(n), w_state(n));
  // Π_i m_i is diagonal: (1+α)^{-1} (−α)^{#flipped spins}
  double numeric = 0.0;
  for (Eigen::Index x = 0; x < rho.dim(); ++x) {
    const double pop = rho.matrix()(x, x).real();
    if (pop == 0.0) continue;
    const int flips = std::popcount(static_cast<unsigned long long>(x));
    numeric += pop * std::pow(-alpha, flips) / (1.0 + alpha);
  }
  out.numeric = numeric;
  return out;
}

double partial_transpose_min_eig(const DensityMatrix& rho, const Partition& part) {
  const int n = sites_of(rho.dim());
  if (n > kMaxPartialTransposeSites)
    fail(ErrorKind::dimension, "partial_transpose_min_eig: dimension exceeds 2^12");
  part.validate(n);
  const Eigen::Index dim = rho.dim();
  Eigen::MatrixXcd pt(dim, dim);
  for (Eigen::Index x = 0; x < dim; ++x) {
    const auto [l, r] = split(x, part);
    for (Eigen::Index y = 0; y < dim; ++y) {
      const auto [l2, r2] = split(y, part);
      pt(x, y) = rho.matrix()(join(l, r2, part), join(l2, r, part));
    }
  }
  Eigen::SelfAdjointEigenSolver<Eigen::MatrixXcd> es(pt, Eigen::EigenvaluesOnly);
  if (es.info() != Eigen::Success)
    fail(ErrorKind::numerical, "partial_transpose_min_eig: eigensolver failed");
  return es.eigenvalues().minCoeff();
}

}  // namespace spinotto
