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
#include <vector>

#include "spinotto/model.hpp"

namespace spinotto {

struct Spectrum {
  Eigen::VectorXd energies;  // ascending
  Eigen::MatrixXcd vectors;  // columns; empty for values-only spectra

  [[nodiscard]] bool has_vectors() const { return vectors.size() > 0; }
};

Spectrum diagonalize(const HermitianOperator& h);

/** Spectrum of H(ω), diagonalized per parity sector. */
Spectrum chain_spectrum(const ChainParams& params, double omega, bool with_vectors = true);

/** Δ = E1 − E0. */
double energy_gap(const ChainParams& params, double omega);

struct GapCurve {
  std::vector<double> g_grid;
  std::vector<double> gaps;
};

GapCurve gap_curve(const ChainParams& params, double omega0, const std::vector<double>& g_grid);

/**
 * Second central difference (Δ_{k+1} − 2Δ_k + Δ_{k−1})/δg² at the interior
 * grid points g_grid[1..n−2].
 */
std::vector<double> second_difference(const GapCurve& curve);

/** lo, lo + step, ... up to hi inclusive (within step/2). */
std::vector<double> uniform_grid(double lo, double hi, double step);

/** g at the maximum of the second difference of Δ(g) on a uniform grid. */
double critical_coupling(const ChainParams& params, double omega0, const std::vector<double>& g_grid);

/**
 * Coarse scan at δg = 0.05 followed by a δg = `step` window around the
 * coarse peak. Results are cached per (p, N, ω0, boundary, step).
 */
double critical_coupling(const ChainParams& params, double step = 0.01);

Eigen::VectorXd level_occupations(const Eigen::VectorXd& energies, double beta);
Eigen::VectorXd level_occupations(const Spectrum& spectrum, double beta);

struct OccupationBands {
  double ground = 0.0;     // n_0
  double first = 0.0;      // n_1
  double low_band = 0.0;   // Σ_{i=2..N} n_i
  double high_band = 0.0;  // Σ_{i>N} n_i
};

OccupationBands occupation_bands(const Eigen::VectorXd& occupations, int num_sites);

}  // namespace spinotto
