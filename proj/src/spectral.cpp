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

#include "spinotto/spectral.hpp"

#include <algorithm>
#include <map>
#include <mutex>
#include <numeric>
#include <sstream>
#include <tuple>

#include "block_spectrum.hpp"
#include "spinotto/error.hpp"

namespace spinotto {

namespace detail {

Eigen::MatrixXd real_block(const ParityBasis& basis, const ChainParams& params, double omega,
                           int parity) {
  const CouplingMatrix j = coupling_matrix(params);
  const PairFlipOperator op(basis, omega, params.g, j.matrix());
  return op.dense_block(parity).real();
}

BlockSpectrum block_spectrum(const ParityBasis& basis, const ChainParams& params, double omega,
                             bool with_vectors) {
  params.validate();
  if (params.n > max_sites())
    fail(ErrorKind::dimension, "N = " + std::to_string(params.n) +
                                   " exceeds the configured maximum of " +
                                   std::to_string(max_sites()));
  BlockSpectrum out;
  for (int parity = 0; parity < 2; ++parity) {
    const Eigen::MatrixXd h = real_block(basis, params, omega, parity);
    Eigen::SelfAdjointEigenSolver<Eigen::MatrixXd> es(
        h, with_vectors ? Eigen::ComputeEigenvectors : Eigen::EigenvaluesOnly);
    if (es.info() != Eigen::Success) {
      std::ostringstream msg;
      msg << "eigensolver did not converge on parity block " << parity
          << " (Frobenius norm " << h.norm() << ", max |h_ij| " << h.cwiseAbs().maxCoeff() << ")";
      fail(ErrorKind::numerical, msg.str());
    }
    out.energies[parity] = es.eigenvalues();
    if (with_vectors) out.vectors[parity] = es.eigenvectors();
  }
  out.merged.resize(basis.full_dim());
  std::merge(out.energies[0].begin(), out.energies[0].end(), out.energies[1].begin(),
             out.energies[1].end(), out.merged.begin());
  return out;
}

}  // namespace detail

Spectrum diagonalize(const HermitianOperator& h) {
  Eigen::SelfAdjointEigenSolver<Eigen::MatrixXcd> es(h.matrix());
  if (es.info() != Eigen::Success) {
    std::ostringstream msg;
    msg << "eigensolver did not converge (dim " << h.dim() << ", Frobenius norm "
        << h.matrix().norm() << ", max |h_ij| " << h.matrix().cwiseAbs().maxCoeff() << ")";
    fail(ErrorKind::numerical, msg.str());
  }
  return Spectrum{es.eigenvalues(), es.eigenvectors()};
}

Spectrum chain_spectrum(const ChainParams& params, double omega, bool with_vectors) {
  const detail::ParityBasis basis(params.n);
  const detail::BlockSpectrum bs = detail::block_spectrum(basis, params, omega, with_vectors);
  Spectrum out;
  out.energies = bs.merged;
  if (!with_vectors) return out;

  // stable merge: ties go to the even sector first
  const Eigen::Index half = basis.block_dim();
  out.vectors = Eigen::MatrixXcd::Zero(basis.full_dim(), basis.full_dim());
  Eigen::Index i0 = 0, i1 = 0;
  for (Eigen::Index col = 0; col < basis.full_dim(); ++col) {
    const bool take_even = i1 >= half || (i0 < half && bs.energies[0](i0) <= bs.energies[1](i1));
    const int parity = take_even ? 0 : 1;
    const Eigen::Index k = take_even ? i0++ : i1++;
    for (Eigen::Index r = 0; r < half; ++r)
      out.vectors(basis.state(parity, r), col) = bs.vectors[parity](r, k);
  }
  return out;
}

double energy_gap(const ChainParams& params, double omega) {
  if (params.n == 1) return std::abs(omega);
  const detail::ParityBasis basis(params.n);
  const detail::BlockSpectrum bs = detail::block_spectrum(basis, params, omega, false);
  return bs.merged(1) - bs.merged(0);
}

GapCurve gap_curve(const ChainParams& params, double omega0, const std::vector<double>& g_grid) {
  GapCurve curve;
  curve.g_grid = g_grid;
  curve.gaps.reserve(g_grid.size());
  ChainParams at = params;
  for (double g : g_grid) {
    at.g = g;
    curve.gaps.push_back(energy_gap(at, omega0));
  }
  return curve;
}

std::vector<double> second_difference(const GapCurve& curve) {
  const std::size_t n = curve.g_grid.size();
  std::vector<double> out;
  if (n < 3) return out;
  const double dg = (curve.g_grid.back() - curve.g_grid.front()) / static_cast<double>(n - 1);
  out.reserve(n - 2);
  for (std::size_t k = 1; k + 1 < n; ++k)
    out.push_back((curve.gaps[k + 1] - 2.0 * curve.gaps[k] + curve.gaps[k - 1]) / (dg * dg));
  return out;
}

std::vector<double> uniform_grid(double lo, double hi, double step) {
  require(step > 0.0 && hi >= lo, "uniform_grid: need step > 0 and hi >= lo");
  const auto count = static_cast<std::size_t>(std::floor((hi - lo) / step + 0.5)) + 1;
  std::vector<double> grid(count);
  for (std::size_t k = 0; k < count; ++k) grid[k] = lo + step * static_cast<double>(k);
  return grid;
}

double critical_coupling(const ChainParams& params, double omega0,
                         const std::vector<double>& g_grid) {
  require(g_grid.size() >= 5, "critical_coupling: grid needs at least 5 points");
  const double dg = g_grid[1] - g_grid[0];
  for (std::size_t k = 1; k < g_grid.size(); ++k) {
    require(g_grid[k] > g_grid[k - 1], "critical_coupling: grid must be strictly increasing");
    require(std::abs((g_grid[k] - g_grid[k - 1]) - dg) <= 1e-9 * std::max(1.0, std::abs(dg)),
            "critical_coupling: grid must be uniform");
  }
  const std::vector<double> d2 = second_difference(gap_curve(params, omega0, g_grid));
  std::size_t best = 0;
  for (std::size_t k = 1; k < d2.size(); ++k)
    if (d2[k] > d2[best]) best = k;
  if (best == 0 || best + 1 == d2.size())
    fail(ErrorKind::grid, "grid does not bracket transition");
  return g_grid[best + 1];
}

double critical_coupling(const ChainParams& params, double step) {
  params.validate();
  require(step > 0.0 && step <= 0.05, "critical_coupling: step must lie in (0, 0.05]");
  using Key = std::tuple<double, int, double, int, double>;
  static std::mutex mutex;
  static std::map<Key, double> cache;
  const Key key{params.p, params.n, params.omega0, static_cast<int>(params.boundary), step};
  {
    const std::lock_guard<std::mutex> lock(mutex);
    if (auto it = cache.find(key); it != cache.end()) return it->second;
  }
  const double coarse_step = 0.05 * params.omega0;
  const double coarse = critical_coupling(
      params, params.omega0, uniform_grid(0.0, 3.0 * params.omega0, coarse_step));
  const double lo = std::max(0.0, coarse - 2.0 * coarse_step);
  const double gc = critical_coupling(
      params, params.omega0, uniform_grid(lo, coarse + 2.0 * coarse_step, step * params.omega0));
  const std::lock_guard<std::mutex> lock(mutex);
  cache.emplace(key, gc);
  return gc;
}

Eigen::VectorXd level_occupations(const Eigen::VectorXd& energies, double beta) {
  require(beta >= 0.0 && std::isfinite(beta), "level_occupations: beta must be non-negative");
  require(energies.size() > 0, "level_occupations: empty spectrum");
  const double e0 = energies.minCoeff();
  Eigen::VectorXd w = (-(beta) * (energies.array() - e0)).exp().matrix();
  return w / w.sum();
}

Eigen::VectorXd level_occupations(const Spectrum& spectrum, double beta) {
  return level_occupations(spectrum.energies, beta);
}

OccupationBands occupation_bands(const Eigen::VectorXd& occupations, int num_sites) {
  OccupationBands b;
  const Eigen::Index size = occupations.size();
  for (Eigen::Index i = 0; i < size; ++i) {
    const double v = occupations(i);
    if (i == 0)
      b.ground += v;
    else if (i == 1)
      b.first += v;
    else if (i <= num_sites)
      b.low_band += v;
    else
      b.high_band += v;
  }
  return b;
}

}  // namespace spinotto
