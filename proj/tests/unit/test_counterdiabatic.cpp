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
#include "spinotto/counterdiabatic.hpp"

using namespace spinotto;

namespace {

double max_abs(const Eigen::MatrixXd& m) { return m.cwiseAbs().maxCoeff(); }

}  // namespace

TEST_SUITE("counterdiabatic") {
  TEST_CASE("closed form solves the stationarity system") {
    for (int n = 3; n <= 8; ++n)
      for (double p : {1.0, 2.0, 3.0, kInfiniteRange})
        for (Boundary b : {Boundary::open, Boundary::periodic}) {
          ChainParams c{n, p, 0.9, 1.0, b};
          const auto cd = variational_coefficients(c, 1.05, -0.3, CdVariant::full);
          CAPTURE(n);
          CAPTURE(p);
          CHECK(stationarity_residual(c, 1.05, -0.3, cd.c) < 1e-10);
          CHECK(cd.c.diagonal().cwiseAbs().maxCoeff() == 0.0);
        }
  }

  TEST_CASE("chi one coefficients") {
    ChainParams c{4, 2.0, 0.6, 1.0, Boundary::open};
    const auto cd = variational_coefficients(c, 1.2, 0.4, CdVariant::chi_one);
    const Eigen::MatrixXd want = -0.6 * 0.4 * coupling_matrix(c).matrix() / (2 * 1.2 * 1.2);
    CHECK(max_abs(cd.c - want) < 1e-15);
  }

  TEST_CASE("no interactions, no drive") {
    ChainParams c{5, 2.0, 0.0, 1.0, Boundary::open};
    for (CdVariant v : {CdVariant::full, CdVariant::chi_one, CdVariant::action_minimum})
      CHECK(max_abs(variational_coefficients(c, 1.0, 0.5, v).c) < 1e-15);
    ChainParams still{5, 2.0, 0.7, 1.0, Boundary::open};
    CHECK(max_abs(variational_coefficients(still, 1.0, 0.0, CdVariant::full).c) == 0.0);
  }

  TEST_CASE("on rings the closed form is the action minimizer") {
    for (int n : {3, 4})
      for (double p : {1.0, kInfiniteRange}) {
        ChainParams c{n, p, 0.8, 1.0, Boundary::periodic};
        const auto cd = variational_coefficients(c, 1.1, 0.25, CdVariant::full);
        const Eigen::MatrixXd ref =
            oracle::cd_minimizer(coupling_matrix(c).matrix(), 1.1, 0.25, 0.8);
        CAPTURE(n);
        CHECK(max_abs(cd.c - ref) < 1e-8);
      }
  }

  TEST_CASE("action_minimum reproduces the dense minimizer on open chains") {
    for (int n : {3, 4})
      for (double p : {1.0, 2.0, kInfiniteRange}) {
        ChainParams c{n, p, 0.8, 1.0, Boundary::open};
        const auto cd = variational_coefficients(c, 1.1, 0.25, CdVariant::action_minimum);
        const Eigen::MatrixXd ref =
            oracle::cd_minimizer(coupling_matrix(c).matrix(), 1.1, 0.25, 0.8);
        CAPTURE(n);
        CAPTURE(p);
        CHECK(max_abs(cd.c - ref) < 1e-8);
        const auto closed = variational_coefficients(c, 1.1, 0.25, CdVariant::full);
        CHECK(chain_action(c, 1.1, 0.25, cd.c) <= chain_action(c, 1.1, 0.25, closed.c) + 1e-12);
      }
  }

  TEST_CASE("operator construction and action agree with the Kronecker oracle") {
    ChainParams c{4, 1.5, 0.7, 1.0, Boundary::open};
    const double w = 0.9, wd = -0.6;
    const auto cd = variational_coefficients(c, w, wd, CdVariant::full);
    const HermitianOperator hcd = cd_hamiltonian(cd);
    CHECK((hcd.matrix() - oracle::cd_operator(cd.c)).cwiseAbs().maxCoeff() < 1e-14);

    const HermitianOperator h = build_hamiltonian(c, w);
    const HermitianOperator dhdt(wd * transverse_field_operator(4).matrix());
    const double dense = action(h, dhdt, hcd);
    CHECK(chain_action(c, w, wd, cd.c) == doctest::Approx(dense).epsilon(1e-12));

    const Eigen::MatrixXcd g =
        dhdt.matrix() + oracle::cplx(0, 1) * (hcd.matrix() * h.matrix() - h.matrix() * hcd.matrix());
    CHECK(dense == doctest::Approx(g.squaredNorm()).epsilon(1e-12));
  }

  TEST_CASE("stationarity residual of a perturbed solution is nonzero") {
    ChainParams c{4, 2.0, 0.7, 1.0, Boundary::open};
    auto cd = variational_coefficients(c, 1.0, 0.5, CdVariant::full);
    cd.c(0, 1) += 1e-3;
    CHECK(stationarity_residual(c, 1.0, 0.5, cd.c) > 1e-4);
  }
}
