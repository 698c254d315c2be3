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

#include "spinotto/model.hpp"

#include <bit>
#include <cstdlib>
#include <numbers>
#include <string>

#include "spinotto/error.hpp"

namespace spinotto {

namespace {

constexpr double kHermitianTolerance = 1e-12;

int site_distance(int i, int k, int n, Boundary boundary) {
  const int d = std::abs(i - k);
  return boundary == Boundary::periodic ? std::min(d, n - d) : d;
}

}  // namespace

void ChainParams::validate() const {
  require(n >= 1, "N must be at least 1");
  require(std::isfinite(g) && g >= 0.0, "g must be finite and non-negative");
  require(std::isfinite(omega0) && omega0 > 0.0, "omega0 must be positive");
  require(p > 0.0, "p must be positive or infinity");
}

int max_sites() {
  if (const char* env = std::getenv("SPINOTTO_MAX_N")) {
    char* end = nullptr;
    const long v = std::strtol(env, &end, 10);
    if (end != env && *end == '\0' && v >= 1 && v <= 30) return static_cast<int>(v);
  }
  return kDefaultMaxSites;
}

CouplingMatrix::CouplingMatrix(Eigen::MatrixXd j) : j_(std::move(j)) {
  require(j_.rows() == j_.cols(), "coupling matrix must be square");
  for (Eigen::Index a = 0; a < j_.rows(); ++a) {
    require(j_(a, a) == 0.0, "coupling matrix must have zero diagonal");
    for (Eigen::Index b = 0; b < j_.cols(); ++b) {
      require(j_(a, b) == j_(b, a), "coupling matrix must be symmetric");
      require(j_(a, b) >= 0.0 && j_(a, b) <= 1.0, "coupling entries must lie in [0, 1]");
    }
  }
}

double CouplingMatrix::max_row_sum() const {
  return j_.size() == 0 ? 0.0 : j_.rowwise().sum().maxCoeff();
}

CouplingMatrix coupling_matrix(const ChainParams& params) {
  params.validate();
  const int n = params.n;
  Eigen::MatrixXd j = Eigen::MatrixXd::Zero(n, n);
  for (int a = 0; a < n; ++a) {
    for (int b = a + 1; b < n; ++b) {
      const int d = site_distance(a, b, n, params.boundary);
      double v = 0.0;
      if (params.nearest_neighbour())
        v = d == 1 ? 1.0 : 0.0;
      else
        v = 1.0 / std::pow(static_cast<double>(d), params.p);
      j(a, b) = v;
      j(b, a) = v;
    }
  }
  return CouplingMatrix(std::move(j));
}

HermitianOperator::HermitianOperator(Eigen::MatrixXcd m) : m_(std::move(m)) {
  require(m_.rows() == m_.cols(), "operator must be square");
  const double dev = (m_ - m_.adjoint()).cwiseAbs().maxCoeff();
  if (!(dev <= kHermitianTolerance))
    fail(ErrorKind::numerical,
         "operator is not Hermitian (max |A - A^H| = " + std::to_string(dev) + ")");
}

int HermitianOperator::num_sites() const {
  return std::countr_zero(static_cast<unsigned long long>(m_.rows()));
}

Eigen::VectorXd hamiltonian_diagonal(int n, double omega) {
  const Eigen::Index dim = Eigen::Index{1} << n;
  Eigen::VectorXd d(dim);
  for (Eigen::Index x = 0; x < dim; ++x) {
    const int down = std::popcount(static_cast<unsigned long long>(x));
    d(x) = -omega * (0.5 * n - down);
  }
  return d;
}

HermitianOperator build_hamiltonian(const ChainParams& params, double omega) {
  params.validate();
  const int n = params.n;
  if (n > max_sites())
    fail(ErrorKind::dimension, "N = " + std::to_string(n) + " exceeds the configured maximum of " +
                                   std::to_string(max_sites()));
  const CouplingMatrix j = coupling_matrix(params);
  const Eigen::Index dim = Eigen::Index{1} << n;
  Eigen::MatrixXcd h = Eigen::MatrixXcd::Zero(dim, dim);
  h.diagonal() = hamiltonian_diagonal(n, omega).cast<cplx>();
  for (int a = 0; a < n; ++a) {
    for (int b = a + 1; b < n; ++b) {
      // ordered pairs (a,b) and (b,a) each carry g J σ_x σ_x
      const double amp = -0.5 * params.g * j(a, b);
      if (amp == 0.0) continue;
      const Eigen::Index mask = (Eigen::Index{1} << a) | (Eigen::Index{1} << b);
      for (Eigen::Index x = 0; x < dim; ++x) h(x ^ mask, x) += amp;
    }
  }
  return HermitianOperator(std::move(h));
}

HermitianOperator transverse_field_operator(int n) {
  require(n >= 1 && n <= max_sites(), "site count out of range");
  const Eigen::Index dim = Eigen::Index{1} << n;
  Eigen::MatrixXcd h = Eigen::MatrixXcd::Zero(dim, dim);
  h.diagonal() = hamiltonian_diagonal(n, 1.0).cast<cplx>();
  return HermitianOperator(std::move(h));
}

void DriveProtocol::validate() const {
  require(std::isfinite(r) && r > 1.0, "compression ratio r must exceed 1");
  require(std::isfinite(tau) && tau > 0.0, "stroke duration tau must be positive");
}

double drive_value(const DriveProtocol& protocol, double t) {
  protocol.validate();
  require(t >= 0.0 && t <= protocol.tau, "drive time outside [0, tau]");
  const double s = protocol.direction == Stroke::expand ? t : protocol.tau - t;
  const double sn = std::sin(std::numbers::pi * s / (2.0 * protocol.tau));
  return protocol.r + (1.0 - protocol.r) * sn * sn;
}

double drive_rate(const DriveProtocol& protocol, double t) {
  protocol.validate();
  require(t >= 0.0 && t <= protocol.tau, "drive time outside [0, tau]");
  const double k = std::numbers::pi / (2.0 * protocol.tau);
  const double amp = protocol.direction == Stroke::expand ? 1.0 - protocol.r : protocol.r - 1.0;
  return amp * k * std::sin(std::numbers::pi * t / protocol.tau);
}

}  // namespace spinotto
