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

#include <cmath>

#include "../oracles.hpp"
#include "doctest.h"
#include "spinotto/error.hpp"
#include "spinotto/spectral.hpp"

using namespace spinotto;

namespace {

Eigen::VectorXd oracle_levels(int n, double p, bool periodic, double omega, double g) {
  Eigen::SelfAdjointEigenSolver<Eigen::MatrixXcd> es(
      oracle::hamiltonian(oracle::couplings(n, p, periodic), omega, g), Eigen::EigenvaluesOnly);
  return es.eigenvalues();
}

}  // namespace

TEST_SUITE("spectral") {
  TEST_CASE("two-site levels in closed form") {
    const double w = 0.8, g = 0.6;
    ChainParams c{2, kInfiniteRange, g, 1.0, Boundary::open};
    const Spectrum s = chain_spectrum(c, w);
    const double a = std::sqrt(w * w + g * g / 4);
    REQUIRE(s.energies.size() == 4);
    CHECK(s.energies(0) == doctest::Approx(-a).epsilon(1e-14));
    CHECK(s.energies(1) == doctest::Approx(-g / 2).epsilon(1e-14));
    CHECK(s.energies(2) == doctest::Approx(g / 2).epsilon(1e-14));
    CHECK(s.energies(3) == doctest::Approx(a).epsilon(1e-14));
  }

  TEST_CASE("sector diagonalization agrees with the dense oracle") {
    for (int n : {3, 4, 7})
      for (double p : {1.0, 2.0, kInfiniteRange})
        for (bool periodic : {false, true}) {
          ChainParams c{n, p, 0.9, 1.0, periodic ? Boundary::periodic : Boundary::open};
          const Spectrum s = chain_spectrum(c, 1.05);
          const Eigen::VectorXd ref = oracle_levels(n, p, periodic, 1.05, 0.9);
          CAPTURE(n);
          CHECK((s.energies - ref).cwiseAbs().maxCoeff() < 1e-11);
          const auto h = build_hamiltonian(c, 1.05);
          // eigenvector residual ‖Hv − Ev‖
          const Eigen::MatrixXcd resid =
              h.matrix() * s.vectors - s.vectors * s.energies.asDiagonal();
          CHECK(resid.cwiseAbs().maxCoeff() < 1e-11);
          CHECK((s.vectors.adjoint() * s.vectors - Eigen::MatrixXcd::Identity(1 << n, 1 << n))
                    .cwiseAbs()
                    .maxCoeff() < 1e-11);
        }
  }

  TEST_CASE("dense diagonalize sorts ascending") {
    ChainParams c{4, 2.0, 0.4, 1.0, Boundary::open};
    const Spectrum s = diagonalize(build_hamiltonian(c, 1.0));
    for (Eigen::Index k = 1; k < s.energies.size(); ++k) CHECK(s.energies(k) >= s.energies(k - 1));
    CHECK((s.energies - chain_spectrum(c, 1.0, false).energies).cwiseAbs().maxCoeff() < 1e-12);
  }

  TEST_CASE("gap at zero coupling equals the field") {
    ChainParams c{5, 2.0, 0.0, 1.0, Boundary::open};
    CHECK(energy_gap(c, 1.3) == doctest::Approx(1.3).epsilon(1e-12));
  }

  TEST_CASE("uniform grid and second difference") {
    const auto grid = uniform_grid(0.0, 1.0, 0.1);
    REQUIRE(grid.size() == 11);
    CHECK(grid.back() == doctest::Approx(1.0));
    GapCurve quad{grid, {}};
    for (double g : grid) quad.gaps.push_back(3.0 * g * g - g);
    const auto d2 = second_difference(quad);
    REQUIRE(d2.size() == 9);
    for (double v : d2) CHECK(v == doctest::Approx(6.0).epsilon(1e-9));
  }

  TEST_CASE("critical coupling on a grid that misses the transition") {
    ChainParams c{6, kInfiniteRange, 0.0, 1.0, Boundary::open};
    try {
      critical_coupling(c, 1.0, uniform_grid(0.0, 0.3, 0.05));
      FAIL("expected a grid error");
    } catch (const Error& e) {
      CHECK(e.kind() == ErrorKind::grid);
    }
    CHECK_THROWS_AS(critical_coupling(c, 1.0, {0.0, 0.1, 0.2}), Error);
    CHECK_THROWS_AS(critical_coupling(c, 1.0, {0.0, 0.1, 0.3, 0.4, 0.5}), Error);
  }

  TEST_CASE("critical coupling is near the field and grows with p") {
    double prev = 0.0;
    for (double p : {1.5, 2.0, 3.0, kInfiniteRange}) {
      ChainParams c{8, p, 0.0, 1.0, Boundary::periodic};
      const double gc = critical_coupling(c);
      CAPTURE(p);
      CHECK(gc > prev);
      prev = gc;
    }
    CHECK(prev > 0.6);
    CHECK(prev < 1.3);
  }

  TEST_CASE("level occupations and bands") {
    ChainParams c{4, kInfiniteRange, 0.5, 1.0, Boundary::open};
    const Spectrum s = chain_spectrum(c, 1.0, false);
    const Eigen::VectorXd occ = level_occupations(s, 2.0);
    CHECK(occ.sum() == doctest::Approx(1.0).epsilon(1e-14));
    const double z = (-2.0 * (s.energies.array() - s.energies(0))).exp().sum();
    CHECK(occ(0) == doctest::Approx(1.0 / z).epsilon(1e-13));
    const OccupationBands b = occupation_bands(occ, 4);
    CHECK(b.ground == doctest::Approx(occ(0)));
    CHECK(b.first == doctest::Approx(occ(1)));
    CHECK(b.low_band == doctest::Approx(occ.segment(2, 3).sum()));
    CHECK(b.ground + b.first + b.low_band + b.high_band == doctest::Approx(1.0));
    // huge β stays finite thanks to the ground shift
    const Eigen::VectorXd cold = level_occupations(s, 1e6);
    CHECK(cold(0) == doctest::Approx(1.0));
  }
}
