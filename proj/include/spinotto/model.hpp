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
#include <cmath>
#include <complex>
#include <limits>

namespace spinotto {

using cplx = std::complex<double>;

inline constexpr double kInfiniteRange = std::numeric_limits<double>::infinity();
inline constexpr int kDefaultMaxSites = 14;

enum class Boundary { open, periodic };

struct ChainParams {
  int n = 2;
  double p = kInfiniteRange;
  double g = 0.0;
  double omega0 = 1.0;
  Boundary boundary = Boundary::open;

  /** Throws spinotto::Error on violated invariants. */
  void validate() const;
  [[nodiscard]] bool nearest_neighbour() const { return std::isinf(p); }
};

/** Largest N accepted by operator builders; SPINOTTO_MAX_N overrides the default. */
int max_sites();

class CouplingMatrix {
 public:
  explicit CouplingMatrix(Eigen::MatrixXd j);

  [[nodiscard]] const Eigen::MatrixXd& matrix() const { return j_; }
  [[nodiscard]] double operator()(int i, int k) const { return j_(i, k); }
  [[nodiscard]] int size() const { return static_cast<int>(j_.rows()); }
  /** max_i Σ_k J_ik */
  [[nodiscard]] double max_row_sum() const;

 private:
  Eigen::MatrixXd j_;
};

CouplingMatrix coupling_matrix(const ChainParams& params);

/**
 * Dense Hermitian operator on the 2^N product space.
 *
 * Basis convention: bit i of the basis index holds site i; a clear bit is
 * the spin-up state (σ_z = +1/2).
 */
class HermitianOperator {
 public:
  explicit HermitianOperator(Eigen::MatrixXcd m);

  [[nodiscard]] const Eigen::MatrixXcd& matrix() const { return m_; }
  [[nodiscard]] Eigen::Index dim() const { return m_.rows(); }
  [[nodiscard]] int num_sites() const;

 private:
  Eigen::MatrixXcd m_;
};

/** H = −ω Σ_i σ_z^i − g Σ_{i≠j} J_ij σ_x^i σ_x^j with spin-1/2 operators. */
HermitianOperator build_hamiltonian(const ChainParams& params, double omega);

/** −Σ_i σ_z^i, i.e. ∂H/∂ω. */
HermitianOperator transverse_field_operator(int n);

/** Diagonal of H(ω); the off-diagonal part does not depend on ω. */
Eigen::VectorXd hamiltonian_diagonal(int n, double omega);

enum class Stroke { expand, compress };

/** f(t) = r + (1 − r) sin²(πt/2τ) for expand; f(τ − t) for compress. */
struct DriveProtocol {
  double r = 1.1;
  double tau = 1.0;
  Stroke direction = Stroke::expand;

  void validate() const;
};

double drive_value(const DriveProtocol& protocol, double t);
double drive_rate(const DriveProtocol& protocol, double t);

}  // namespace spinotto
