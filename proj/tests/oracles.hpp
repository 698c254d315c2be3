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

// Independent reference constructions used only by tests: Kronecker-product
// operators, closed forms for tiny systems, and brute-force minimizers.

#include <Eigen/Dense>
#include <cmath>
#include <complex>
#include <unsupported/Eigen/KroneckerProduct>
#include <vector>

namespace oracle {

using cplx = std::complex<double>;
using Mat = Eigen::MatrixXcd;

inline Mat pauli(char axis) {
  Mat m(2, 2);
  switch (axis) {
    case 'x':
      m << 0, 1, 1, 0;
      break;
    case 'y':
      m << 0, cplx(0, -1), cplx(0, 1), 0;
      break;
    case 'z':
      m << 1, 0, 0, -1;
      break;
    default:
      m.setIdentity();
  }
  return m;
}

// Spin-1/2 operator on `site`; site 0 is the least significant tensor factor.
inline Mat spin(char axis, int site, int n) {
  Mat out = Mat::Identity(1, 1);
  for (int k = n - 1; k >= 0; --k) {
    const Mat f = k == site ? Mat(0.5 * pauli(axis)) : Mat(Mat::Identity(2, 2));
    out = Eigen::kroneckerProduct(out, f).eval();
  }
  return out;
}

inline Eigen::MatrixXd couplings(int n, double p, bool periodic) {
  Eigen::MatrixXd j = Eigen::MatrixXd::Zero(n, n);
  for (int a = 0; a < n; ++a)
    for (int b = 0; b < n; ++b) {
      if (a == b) continue;
      int d = std::abs(a - b);
      if (periodic) d = std::min(d, n - d);
      j(a, b) = std::isinf(p) ? (d == 1 ? 1.0 : 0.0) : std::pow(d, -p);
    }
  return j;
}

// −ω Σ S_z − g Σ_{i≠j} J_ij S_x S_x, summed over ordered pairs
inline Mat hamiltonian(const Eigen::MatrixXd& j, double omega, double g) {
  const int n = static_cast<int>(j.rows());
  const Eigen::Index dim = Eigen::Index{1} << n;
  Mat h = Mat::Zero(dim, dim);
  for (int a = 0; a < n; ++a) h -= omega * spin('z', a, n);
  for (int a = 0; a < n; ++a)
    for (int b = 0; b < n; ++b)
      if (a != b && j(a, b) != 0.0) h -= g * j(a, b) * spin('x', a, n) * spin('x', b, n);
  return h;
}

inline Mat cd_operator(const Eigen::MatrixXd& c) {
  const int n = static_cast<int>(c.rows());
  const Eigen::Index dim = Eigen::Index{1} << n;
  Mat h = Mat::Zero(dim, dim);
  for (int a = 0; a < n; ++a)
    for (int b = 0; b < n; ++b)
      if (a != b) h += c(a, b) * spin('x', a, n) * spin('y', b, n);
  return h;
}

// Minimizer of ‖∂H/∂t + i[H_cd(C), H]‖²_F over the ordered-pair coefficients,
// solved as a dense least-squares problem in the full operator space.
inline Eigen::MatrixXd cd_minimizer(const Eigen::MatrixXd& j, double omega, double omega_dot,
                                    double g) {
  const int n = static_cast<int>(j.rows());
  const Mat h = hamiltonian(j, omega, g);
  Mat g0 = Mat::Zero(h.rows(), h.cols());
  for (int a = 0; a < n; ++a) g0 -= omega_dot * spin('z', a, n);
  std::vector<std::pair<int, int>> idx;
  for (int a = 0; a < n; ++a)
    for (int b = 0; b < n; ++b)
      if (a != b) idx.emplace_back(a, b);
  const Eigen::Index dim2 = h.size();
  Eigen::MatrixXd a_mat(2 * dim2, static_cast<Eigen::Index>(idx.size()));
  for (std::size_t k = 0; k < idx.size(); ++k) {
    const Mat t = spin('x', idx[k].first, n) * spin('y', idx[k].second, n);
    const Mat col = cplx(0, 1) * (t * h - h * t);
    const Eigen::Map<const Eigen::VectorXcd> v(col.data(), dim2);
    a_mat.col(static_cast<Eigen::Index>(k)) << v.real(), v.imag();
  }
  const Eigen::Map<const Eigen::VectorXcd> gv(g0.data(), dim2);
  Eigen::VectorXd rhs(2 * dim2);
  rhs << -gv.real(), -gv.imag();
  const Eigen::VectorXd x = a_mat.completeOrthogonalDecomposition().solve(rhs);
  Eigen::MatrixXd c = Eigen::MatrixXd::Zero(n, n);
  for (std::size_t k = 0; k < idx.size(); ++k) c(idx[k].first, idx[k].second) = x(static_cast<Eigen::Index>(k));
  return c;
}

// Excited-level population of a two-level system with gap ω.
inline double excited_population(double beta, double omega) {
  return std::exp(-beta * omega) / (1.0 + std::exp(-beta * omega));
}

// Otto work of N independent spins: N(r−1)ω0[q(β_H, rω0) − q(β_C, ω0)].
inline double non_interacting_work(int n, double r, double beta_h, double beta_c, double omega0) {
  return n * (r - 1.0) * omega0 *
         (excited_population(beta_h, r * omega0) - excited_population(beta_c, omega0));
}

// Least-squares slope of y against x.
inline double slope(const std::vector<double>& x, const std::vector<double>& y) {
  const double n = static_cast<double>(x.size());
  double sx = 0, sy = 0, sxx = 0, sxy = 0;
  for (std::size_t k = 0; k < x.size(); ++k) {
    sx += x[k];
    sy += y[k];
    sxx += x[k] * x[k];
    sxy += x[k] * y[k];
  }
  return (n * sxy - sx * sy) / (n * sxx - sx * sx);
}

}  // namespace oracle
