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

#include "spinotto/dynamics.hpp"

#include <algorithm>
#include <cmath>
#include <sstream>

#include "evolution.hpp"
#include "spinotto/error.hpp"
#include "spinotto/spectral.hpp"

namespace spinotto {

namespace {

using detail::BlockDensity;
using detail::PairFlipOperator;
using detail::ParityBasis;
using detail::RowMatrix;

constexpr int kMinSteps = 16;
constexpr double kCoherenceTolerance = 1e-8;

class StrokeHamiltonian {
 public:
  StrokeHamiltonian(const ParityBasis& basis, const ChainParams& params,
                    const DriveProtocol& protocol, const EvolutionConfig& cfg)
      : basis_(basis), params_(params), protocol_(protocol), cfg_(cfg),
        j_(coupling_matrix(params).matrix()) {}

  [[nodiscard]] PairFlipOperator at(double t) const {
    t = std::clamp(t, 0.0, protocol_.tau);
    const double omega = params_.omega0 * drive_value(protocol_, t);
    if (!cfg_.include_cd) return PairFlipOperator(basis_, omega, params_.g, j_);
    const double omega_dot = params_.omega0 * drive_rate(protocol_, t);
    const CDCoefficients cd =
        variational_coefficients(params_, omega, omega_dot, cfg_.cd_variant);
    return PairFlipOperator(basis_, omega, params_.g, j_, &cd.c);
  }

 private:
  const ParityBasis& basis_;
  const ChainParams& params_;
  const DriveProtocol& protocol_;
  const EvolutionConfig& cfg_;
  Eigen::MatrixXd j_;
};

// out = −i[H, x]
void derivative(const PairFlipOperator& h, const BlockDensity& x, BlockDensity& out,
                RowMatrix& scratch) {
  const cplx minus_i(0.0, -1.0);
  for (int parity = 0; parity < 2; ++parity) {
    h.apply(parity, x.diag[parity], scratch);
    out.diag[parity] = minus_i * (scratch - scratch.adjoint());
  }
  out.has_off = x.has_off;
  if (x.has_off) {
    h.apply(0, x.off, scratch);
    RowMatrix b;
    const RowMatrix off_adj = x.off.adjoint();
    h.apply(1, off_adj, b);
    out.off = minus_i * (scratch - b.adjoint());
  }
}

void axpy(const BlockDensity& y, double a, const BlockDensity& k, BlockDensity& out) {
  for (int parity = 0; parity < 2; ++parity) out.diag[parity] = y.diag[parity] + a * k.diag[parity];
  out.has_off = y.has_off;
  if (y.has_off) out.off = y.off + a * k.off;
}

}  // namespace

void EvolutionConfig::validate() const {
  require(steps == 0 || steps >= kMinSteps, "EvolutionConfig: steps must be 0 (auto) or >= 16");
  require(convergence_refinements >= 0, "EvolutionConfig: refinements must be non-negative");
  require(max_step_phase > 0.0 && max_step_phase <= 0.05,
          "EvolutionConfig: max_step_phase must lie in (0, 0.05]");
  require(invariant_tolerance > 0.0 && invariant_tolerance <= 1e-8,
          "EvolutionConfig: invariant_tolerance must lie in (0, 1e-8]");
}

double step_phase(const ChainParams& params, const DriveProtocol& protocol, double dt) {
  const double scale =
      std::max(protocol.r * params.omega0, params.g * coupling_matrix(params).max_row_sum());
  return dt * scale;
}

int resolve_steps(const ChainParams& params, const DriveProtocol& protocol,
                  const EvolutionConfig& cfg) {
  cfg.validate();
  protocol.validate();
  if (cfg.steps == 0) {
    const double per_unit = step_phase(params, protocol, 1.0);
    const double needed = std::ceil(protocol.tau * per_unit / cfg.max_step_phase - 1e-9);
    return std::max(kMinSteps, static_cast<int>(needed));
  }
  long steps = cfg.steps;
  for (int k = 0; k <= cfg.convergence_refinements; ++k) {
    const double phase = step_phase(params, protocol, protocol.tau / static_cast<double>(steps));
    if (phase <= cfg.max_step_phase) return static_cast<int>(steps);
    if (k < cfg.convergence_refinements) steps *= 2;
  }
  std::ostringstream msg;
  msg << "step bound violated after " << cfg.convergence_refinements
      << " refinements: dt*scale = "
      << step_phase(params, protocol, protocol.tau / static_cast<double>(steps)) << " > "
      << cfg.max_step_phase;
  fail(ErrorKind::convergence, msg.str());
}

namespace detail {

namespace {

void integrate(BlockDensity& rho, const StrokeHamiltonian& ham, int steps, double dt) {
  BlockDensity k1, k2, k3, k4, tmp;
  RowMatrix scratch;
  for (int s = 0; s < steps; ++s) {
    const double t = s * dt;
    const PairFlipOperator h0 = ham.at(t);
    const PairFlipOperator hm = ham.at(t + 0.5 * dt);
    const PairFlipOperator h1 = ham.at(t + dt);
    derivative(h0, rho, k1, scratch);
    axpy(rho, 0.5 * dt, k1, tmp);
    derivative(hm, tmp, k2, scratch);
    axpy(rho, 0.5 * dt, k2, tmp);
    derivative(hm, tmp, k3, scratch);
    axpy(rho, dt, k3, tmp);
    derivative(h1, tmp, k4, scratch);
    for (int parity = 0; parity < 2; ++parity) {
      rho.diag[parity] += (dt / 6.0) * (k1.diag[parity] + 2.0 * k2.diag[parity] +
                                        2.0 * k3.diag[parity] + k4.diag[parity]);
      rho.diag[parity] = (0.5 * (rho.diag[parity] + rho.diag[parity].adjoint())).eval();
    }
    if (rho.has_off)
      rho.off += (dt / 6.0) * (k1.off + 2.0 * k2.off + 2.0 * k3.off + k4.off);
  }
}

double block_trace(const BlockDensity& rho) {
  return rho.diag[0].trace().real() + rho.diag[1].trace().real();
}

double block_purity(const BlockDensity& rho) {
  double p = rho.diag[0].squaredNorm() + rho.diag[1].squaredNorm();
  if (rho.has_off) p += 2.0 * rho.off.squaredNorm();
  return p;
}

}  // namespace

EvolutionReport evolve_blocks(BlockDensity& rho, const ParityBasis& basis,
                              const ChainParams& params, const DriveProtocol& protocol,
                              const EvolutionConfig& cfg) {
  params.validate();
  int steps = resolve_steps(params, protocol, cfg);
  const StrokeHamiltonian ham(basis, params, protocol, cfg);
  const BlockDensity start = rho;
  const double trace0 = block_trace(start);
  const double purity0 = block_purity(start);

  EvolutionReport rep;
  for (int k = 0;; ++k) {
    const double dt = protocol.tau / steps;
    integrate(rho, ham, steps, dt);
    rep = EvolutionReport{steps, dt, step_phase(params, protocol, dt), k,
                          std::abs(block_trace(rho) - trace0),
                          std::abs(block_purity(rho) - purity0)};
    if (std::max(rep.trace_drift, rep.purity_drift) <= cfg.invariant_tolerance) return rep;
    if (k >= cfg.convergence_refinements) break;
    rho = start;
    steps *= 2;
  }
  std::ostringstream msg;
  msg << "evolution did not conserve invariants after " << cfg.convergence_refinements
      << " refinements (" << steps << " steps): trace drift " << rep.trace_drift
      << ", purity drift " << rep.purity_drift << " > " << cfg.invariant_tolerance;
  fail(ErrorKind::convergence, msg.str());
}

}  // namespace detail

DensityMatrix evolve(const DensityMatrix& rho0, const ChainParams& params,
                     const DriveProtocol& protocol, const EvolutionConfig& cfg,
                     EvolutionReport* report) {
  params.validate();
  protocol.validate();
  if (rho0.dim() != (Eigen::Index{1} << params.n))
    fail(ErrorKind::dimension, "evolve: density matrix does not match N");
  const ParityBasis basis(params.n);
  BlockDensity blocks = BlockDensity::from_full(basis, rho0.matrix());
  const EvolutionReport rep = detail::evolve_blocks(blocks, basis, params, protocol, cfg);
  if (report) *report = rep;
  return DensityMatrix(blocks.to_full(basis), DensityMatrix::Check::structure);
}

DensityMatrix adiabatic_map(const DensityMatrix& rho0, const HermitianOperator& h_init,
                            const HermitianOperator& h_final) {
  if (rho0.dim() != h_init.dim() || rho0.dim() != h_final.dim())
    fail(ErrorKind::dimension, "adiabatic_map: dimension mismatch");
  const Spectrum a = diagonalize(h_init);
  const Spectrum b = diagonalize(h_final);
  const Eigen::MatrixXcd in_basis = a.vectors.adjoint() * rho0.matrix() * a.vectors;
  Eigen::MatrixXcd off = in_basis;
  off.diagonal().setZero();
  const double coherence = off.cwiseAbs().maxCoeff();
  if (coherence > kCoherenceTolerance) {
    std::ostringstream msg;
    msg << "adiabatic_map: input has coherence " << coherence
        << " in the initial eigenbasis (tolerance " << kCoherenceTolerance << ")";
    fail(ErrorKind::invalid_argument, msg.str());
  }
  const Eigen::VectorXcd pops = in_basis.diagonal().real().cast<cplx>();
  Eigen::MatrixXcd out = b.vectors * pops.asDiagonal() * b.vectors.adjoint();
  out = 0.5 * (out + out.adjoint()).eval();
  out /= out.trace().real();
  return DensityMatrix(std::move(out), DensityMatrix::Check::structure);
}

}  // namespace spinotto
