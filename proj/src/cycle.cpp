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

#include "spinotto/cycle.hpp"

#include "block_spectrum.hpp"
#include "evolution.hpp"
#include "spinotto/error.hpp"
#include "spinotto/spectral.hpp"
#include "spinotto/thermal.hpp"

namespace spinotto {

namespace {

using detail::BlockDensity;
using detail::ParityBasis;

void set_heats_from_energies(CyclePerformance& perf) {
  perf.heat_hot = perf.e_hot - perf.e_4;
  perf.heat_cold = perf.e_2 - perf.e_cold;
}

void finish(CyclePerformance& perf, const CycleParams& cyc) {
  perf.work = perf.heat_hot - perf.heat_cold;
  perf.carnot = 1.0 - cyc.beta_h / cyc.beta_c;
  perf.efficiency_defined = perf.heat_hot > 0.0;
  perf.efficiency = perf.efficiency_defined ? perf.work / perf.heat_hot : 0.0;
  perf.is_engine = perf.work > 0.0 && perf.heat_hot > 0.0;
  perf.power = cyc.tau > 0.0 ? power(perf, cyc.tau) : 0.0;
}

BlockDensity gibbs_blocks(const ParityBasis& basis, const detail::BlockSpectrum& bs, double beta) {
  const double e0 = bs.merged(0);
  std::array<Eigen::VectorXd, 2> w;
  double z = 0.0;
  for (int parity = 0; parity < 2; ++parity) {
    w[parity] = (-beta * (bs.energies[parity].array() - e0)).exp().matrix();
    z += w[parity].sum();
  }
  BlockDensity out;
  for (int parity = 0; parity < 2; ++parity) {
    const Eigen::MatrixXd& v = bs.vectors[parity];
    const Eigen::MatrixXd r = v * (w[parity] / z).asDiagonal() * v.transpose();
    out.diag[parity] = (0.5 * (r + r.transpose())).cast<cplx>();
  }
  out.off.resize(basis.block_dim(), basis.block_dim());
  out.off.setZero();
  return out;
}

// Tr[H(ω) ρ] for a block density; the off-diagonal block never touches H
double block_energy(const ParityBasis& basis, const ChainParams& chain, double omega,
                    const BlockDensity& rho) {
  const Eigen::MatrixXd j = coupling_matrix(chain).matrix();
  const detail::PairFlipOperator h(basis, omega, chain.g, j);
  double e = 0.0;
  detail::RowMatrix hx;
  for (int parity = 0; parity < 2; ++parity) {
    h.apply(parity, rho.diag[parity], hx);
    e += hx.trace().real();
  }
  return e;
}

double mean_energy(const Eigen::VectorXd& occupations, const Eigen::VectorXd& energies) {
  return occupations.dot(energies);
}

}  // namespace

void CycleParams::validate() const {
  require(std::isfinite(r) && r > 1.0, "cycle: r must exceed 1");
  require(std::isfinite(beta_h) && beta_h > 0.0, "cycle: beta_H must be positive");
  require(std::isfinite(beta_c) && beta_c >= beta_h, "cycle: beta_C must be at least beta_H");
  require(std::isfinite(tau) && tau >= 0.0, "cycle: tau must be non-negative");
  if (mode != StrokeMode::adiabatic) require(tau > 0.0, "cycle: diabatic modes need tau > 0");
}

double r_ni_max(double beta_h, double omega0) {
  require(beta_h > 0.0 && omega0 > 0.0, "r_ni_max: beta_H and omega0 must be positive");
  return 1.0 + 1.0 / (beta_h * omega0);
}

double power(const CyclePerformance& perf, double tau) {
  require(tau > 0.0, "power: tau must be positive");
  return perf.work / (2.0 * tau);
}

CyclePerformance run_cycle(const ChainParams& chain, const CycleParams& cyc) {
  chain.validate();
  cyc.validate();
  const ParityBasis basis(chain.n);
  const double w_hot = cyc.r * chain.omega0;
  const double w_cold = chain.omega0;
  const bool dynamic = cyc.mode != StrokeMode::adiabatic;
  const detail::BlockSpectrum hot = detail::block_spectrum(basis, chain, w_hot, dynamic);
  const detail::BlockSpectrum cold = detail::block_spectrum(basis, chain, w_cold, dynamic);

  CyclePerformance perf;
  const Eigen::VectorXd p_hot = level_occupations(hot.merged, cyc.beta_h);
  const Eigen::VectorXd p_cold = level_occupations(cold.merged, cyc.beta_c);
  perf.e_hot = mean_energy(p_hot, hot.merged);
  perf.e_cold = mean_energy(p_cold, cold.merged);

  if (!dynamic) {
    // populations follow sorted level index through each stroke
    perf.e_2 = mean_energy(p_hot, cold.merged);
    perf.e_4 = mean_energy(p_cold, hot.merged);
    // heats from population differences on ground-shifted levels; differencing
    // the absolute energies loses all digits near the engine threshold
    const Eigen::VectorXd d = p_hot - p_cold;
    perf.heat_hot = d.dot((hot.merged.array() - hot.merged(0)).matrix());
    perf.heat_cold = d.dot((cold.merged.array() - cold.merged(0)).matrix());
    finish(perf, cyc);
    return perf;
  }

  EvolutionConfig ev = cyc.evolution;
  ev.include_cd = cyc.mode == StrokeMode::diabatic_cd;
  ev.cd_variant = cyc.cd_variant;

  BlockDensity rho = gibbs_blocks(basis, hot, cyc.beta_h);
  detail::evolve_blocks(rho, basis, chain, DriveProtocol{cyc.r, cyc.tau, Stroke::expand}, ev);
  perf.e_2 = block_energy(basis, chain, w_cold, rho);

  rho = gibbs_blocks(basis, cold, cyc.beta_c);
  detail::evolve_blocks(rho, basis, chain, DriveProtocol{cyc.r, cyc.tau, Stroke::compress}, ev);
  perf.e_4 = block_energy(basis, chain, w_hot, rho);

  set_heats_from_energies(perf);
  finish(perf, cyc);
  return perf;
}

CyclePerformance run_cycle_dense(const ChainParams& chain, const CycleParams& cyc) {
  chain.validate();
  cyc.validate();
  const HermitianOperator h_hot = build_hamiltonian(chain, cyc.r * chain.omega0);
  const HermitianOperator h_cold = build_hamiltonian(chain, chain.omega0);
  const DensityMatrix rho_hot = gibbs_state(h_hot, cyc.beta_h);
  const DensityMatrix rho_cold = gibbs_state(h_cold, cyc.beta_c);

  DensityMatrix rho2 = rho_hot;
  DensityMatrix rho4 = rho_cold;
  if (cyc.mode == StrokeMode::adiabatic) {
    rho2 = adiabatic_map(rho_hot, h_hot, h_cold);
    rho4 = adiabatic_map(rho_cold, h_cold, h_hot);
  } else {
    EvolutionConfig ev = cyc.evolution;
    ev.include_cd = cyc.mode == StrokeMode::diabatic_cd;
    ev.cd_variant = cyc.cd_variant;
    rho2 = evolve(rho_hot, chain, DriveProtocol{cyc.r, cyc.tau, Stroke::expand}, ev);
    rho4 = evolve(rho_cold, chain, DriveProtocol{cyc.r, cyc.tau, Stroke::compress}, ev);
  }
  CyclePerformance perf;
  perf.e_hot = energy_expectation(rho_hot, h_hot);
  perf.e_2 = energy_expectation(rho2, h_cold);
  perf.e_cold = energy_expectation(rho_cold, h_cold);
  perf.e_4 = energy_expectation(rho4, h_hot);
  set_heats_from_energies(perf);
  finish(perf, cyc);
  return perf;
}

CompressionSweep compression_sweep(const ChainParams& chain, const CycleParams& cyc,
                                   const std::vector<double>& r_grid) {
  for (std::size_t k = 0; k < r_grid.size(); ++k) {
    require(r_grid[k] > 1.0, "compression_sweep: every r must exceed 1");
    if (k > 0) require(r_grid[k] > r_grid[k - 1], "compression_sweep: r grid must increase");
  }
  CompressionSweep out;
  out.r_grid = r_grid;
  CycleParams at = cyc;
  for (double r : r_grid) {
    at.r = r;
    out.rows.push_back(run_cycle(chain, at));
    if (out.rows.back().is_engine) out.r_prime = r;
  }
  return out;
}

}  // namespace spinotto
