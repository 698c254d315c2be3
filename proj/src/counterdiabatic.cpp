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

#include "spinotto/counterdiabatic.hpp"

#include <vector>

#include "pair_flip.hpp"
#include "pauli_algebra.hpp"
#include "spinotto/error.hpp"

namespace spinotto {

namespace {

using detail::PauliString;
using detail::PauliSum;

Eigen::MatrixXd closed_form(const Eigen::MatrixXd& j, double g, double omega, double omega_dot) {
  const Eigen::Index n = j.rows();
  const Eigen::VectorXd j2 = (j * j).diagonal();
  Eigen::MatrixXd c = Eigen::MatrixXd::Zero(n, n);
  for (Eigen::Index col = 0; col < n; ++col) {
    Eigen::VectorXd denom(n);
    double f = 0.0;
    for (Eigen::Index m = 0; m < n; ++m) {
      denom(m) = 2.0 * omega * omega + g * g * (0.5 * j2(col) - j(m, col) * j(m, col));
      if (m != col && j(m, col) != 0.0) f += g * g * j(m, col) * j(m, col) / denom(m);
    }
    for (Eigen::Index m = 0; m < n; ++m) {
      if (m == col) continue;
      c(m, col) = -g * omega_dot * j(m, col) / ((1.0 + f) * denom(m));
    }
  }
  return c;
}

PauliSum chain_pauli(const Eigen::MatrixXd& j, double g, double omega) {
  const int n = static_cast<int>(j.rows());
  PauliSum h;
  for (int a = 0; a < n; ++a) h.add(detail::single(a, 'z'), -0.5 * omega);
  for (int a = 0; a < n; ++a)
    for (int b = a + 1; b < n; ++b)
      if (j(a, b) != 0.0) h.add(detail::pair(a, 'x', b, 'x'), -0.5 * g * j(a, b));
  return h;
}

PauliSum field_rate(int n, double omega_dot) {
  PauliSum d;
  for (int a = 0; a < n; ++a) d.add(detail::single(a, 'z'), -0.5 * omega_dot);
  return d;
}

// i[X_m Y_n / 4, H] for every ordered pair, in row-major (m, n) order
std::vector<PauliSum> response_terms(const PauliSum& h, int n) {
  std::vector<PauliSum> out;
  out.reserve(static_cast<std::size_t>(n * (n - 1)));
  for (int m = 0; m < n; ++m) {
    for (int k = 0; k < n; ++k) {
      if (m == k) continue;
      PauliSum t;
      t.add(detail::pair(m, 'x', k, 'y'), 0.25);
      PauliSum a;
      a.add(detail::commutator(t, h), cplx(0.0, 1.0));
      out.push_back(std::move(a));
    }
  }
  return out;
}

Eigen::MatrixXd action_minimum(const Eigen::MatrixXd& j, double g, double omega,
                               double omega_dot) {
  const int n = static_cast<int>(j.rows());
  const PauliSum h = chain_pauli(j, g, omega);
  const PauliSum g0 = field_rate(n, omega_dot);
  const std::vector<PauliSum> a = response_terms(h, n);
  const auto k = static_cast<Eigen::Index>(a.size());
  Eigen::MatrixXd m(k, k);
  Eigen::VectorXd b(k);
  for (Eigen::Index r = 0; r < k; ++r) {
    b(r) = a[static_cast<std::size_t>(r)].real_inner(g0);
    for (Eigen::Index s = r; s < k; ++s) {
      m(r, s) = a[static_cast<std::size_t>(r)].real_inner(a[static_cast<std::size_t>(s)]);
      m(s, r) = m(r, s);
    }
  }
  // ring geometries leave directions of zero curvature; take the minimum-norm solution
  const Eigen::VectorXd x = m.completeOrthogonalDecomposition().solve(-b);
  Eigen::MatrixXd c = Eigen::MatrixXd::Zero(n, n);
  Eigen::Index idx = 0;
  for (int r = 0; r < n; ++r)
    for (int s = 0; s < n; ++s)
      if (r != s) c(r, s) = x(idx++);
  return c;
}

}  // namespace

CDCoefficients variational_coefficients(const ChainParams& params, double omega, double omega_dot,
                                        CdVariant variant) {
  params.validate();
  require(std::isfinite(omega) && omega != 0.0, "variational_coefficients: omega must be nonzero");
  require(std::isfinite(omega_dot), "variational_coefficients: omega_dot must be finite");
  const Eigen::MatrixXd j = coupling_matrix(params).matrix();
  CDCoefficients out;
  out.omega = omega;
  out.omega_dot = omega_dot;
  out.g = params.g;
  out.p = params.p;
  out.n = params.n;
  switch (variant) {
    case CdVariant::full:
      out.c = closed_form(j, params.g, omega, omega_dot);
      break;
    case CdVariant::chi_one:
      out.c = (-params.g * omega_dot / (2.0 * omega * omega)) * j;
      break;
    case CdVariant::action_minimum:
      out.c = omega_dot == 0.0 || params.g == 0.0
                  ? Eigen::MatrixXd::Zero(params.n, params.n)
                  : action_minimum(j, params.g, omega, omega_dot);
      break;
  }
  return out;
}

double stationarity_residual(const ChainParams& params, double omega, double omega_dot,
                             const Eigen::MatrixXd& c) {
  const Eigen::MatrixXd j = coupling_matrix(params).matrix();
  require(c.rows() == j.rows() && c.cols() == j.cols(), "stationarity_residual: shape mismatch");
  const double g = params.g;
  const Eigen::VectorXd j2 = (j * j).diagonal();
  const Eigen::VectorXd jc = (j * c).diagonal();
  double worst = 0.0;
  for (Eigen::Index m = 0; m < j.rows(); ++m) {
    for (Eigen::Index k = 0; k < j.cols(); ++k) {
      if (m == k) continue;
      const double r = g * omega_dot * j(m, k) + 2.0 * omega * omega * c(m, k) +
                       g * g * (j(m, k) * jc(k) + 0.5 * j2(k) * c(m, k) - j(m, k) * j(m, k) * c(m, k));
      worst = std::max(worst, std::abs(r));
    }
  }
  return worst;
}

HermitianOperator cd_hamiltonian(const CDCoefficients& coeffs) {
  require(coeffs.n >= 1 && coeffs.c.rows() == coeffs.n && coeffs.c.cols() == coeffs.n,
          "cd_hamiltonian: coefficient shape mismatch");
  if (coeffs.n > max_sites()) fail(ErrorKind::dimension, "cd_hamiltonian: N exceeds maximum");
  for (int m = 0; m < coeffs.n; ++m) {
    require(coeffs.c(m, m) == 0.0, "cd_hamiltonian: C must have zero diagonal");
    for (int k = 0; k < coeffs.n; ++k)
      require(std::isfinite(coeffs.c(m, k)), "cd_hamiltonian: C must be finite");
  }
  const detail::ParityBasis basis(coeffs.n);
  const Eigen::MatrixXd zero = Eigen::MatrixXd::Zero(coeffs.n, coeffs.n);
  const detail::PairFlipOperator op(basis, 0.0, 0.0, zero, &coeffs.c);
  return HermitianOperator(op.dense());
}

double action(const HermitianOperator& h, const HermitianOperator& dhdt,
              const HermitianOperator& hcd) {
  if (h.dim() != dhdt.dim() || h.dim() != hcd.dim())
    fail(ErrorKind::dimension, "action: dimension mismatch");
  const Eigen::MatrixXcd comm = hcd.matrix() * h.matrix() - h.matrix() * hcd.matrix();
  const Eigen::MatrixXcd g = dhdt.matrix() + cplx(0.0, 1.0) * comm;
  return g.squaredNorm();
}

double chain_action(const ChainParams& params, double omega, double omega_dot,
                    const Eigen::MatrixXd& c) {
  params.validate();
  const Eigen::MatrixXd j = coupling_matrix(params).matrix();
  require(c.rows() == params.n && c.cols() == params.n, "chain_action: shape mismatch");
  const PauliSum h = chain_pauli(j, params.g, omega);
  PauliSum cd;
  for (int m = 0; m < params.n; ++m)
    for (int k = 0; k < params.n; ++k)
      if (m != k && c(m, k) != 0.0) cd.add(detail::pair(m, 'x', k, 'y'), 0.25 * c(m, k));
  PauliSum g = field_rate(params.n, omega_dot);
  g.add(detail::commutator(cd, h), cplx(0.0, 1.0));
  return std::ldexp(g.norm2(), params.n);
}

}  // namespace spinotto
