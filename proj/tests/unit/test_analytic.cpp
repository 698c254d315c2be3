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
#include <numbers>

#include "../oracles.hpp"
#include "../reference_values.hpp"
#include "doctest.h"
#include "spinotto/analytic.hpp"
#include "spinotto/error.hpp"
#include "spinotto/spectral.hpp"
#include "spinotto/thermal.hpp"

using namespace spinotto;

namespace {

constexpr double kPi = std::numbers::pi;

// Trapezoid rule on [0, π] for even periodic integrands converges geometrically.
template <class F>
double periodic_mean(F f, int points = 4000) {
  double sum = 0.5 * (f(0.0) + f(kPi));
  for (int k = 1; k < points; ++k) sum += f(kPi * k / points);
  return sum / points;
}

}  // namespace

TEST_SUITE("analytic") {
  TEST_CASE("infinite Clausen sums match pinned values") {
    const auto& thetas = reference::kClausenThetas;
    for (const auto& row : reference::kClausen)
      for (int k = 0; k < 4; ++k) {
        CAPTURE(row.p);
        CAPTURE(thetas[k]);
        CHECK(clausen(row.p, kInfiniteRange, thetas[k]) ==
              doctest::Approx(row.values[k]).epsilon(1e-10));
        CHECK(clausen(row.p, kInfiniteRange, -thetas[k]) ==
              doctest::Approx(row.values[k]).epsilon(1e-10));
        CHECK(clausen(row.p, kInfiniteRange, thetas[k] + 2 * kPi) ==
              doctest::Approx(row.values[k]).epsilon(1e-10));
      }
  }

  TEST_CASE("Clausen special cases") {
    CHECK(clausen(kInfiniteRange, kInfiniteRange, 0.7) == doctest::Approx(std::cos(0.7)));
    CHECK(clausen(kInfiniteRange, 5, 0.7) == doctest::Approx(std::cos(0.7)));
    CHECK(clausen(2.5, kInfiniteRange, 0.0) == doctest::Approx(1.3414872572509171798).epsilon(1e-12));
    CHECK(clausen(1.0, kInfiniteRange, 1.0) ==
          doctest::Approx(-std::log(2 * std::sin(0.5))).epsilon(1e-14));
    CHECK_THROWS_AS(clausen(1.0, kInfiniteRange, 0.0), Error);
    CHECK_THROWS_AS(clausen(0.5, kInfiniteRange, 1.0), Error);
    CHECK_THROWS_AS(clausen(2.0, 3.5, 1.0), Error);
  }

  TEST_CASE("finite Clausen sums") {
    double direct = 0.0;
    for (int m = 1; m <= 7; ++m) direct += std::cos(m * 1.3) / std::pow(m, 1.7);
    CHECK(clausen(1.7, 7, 1.3) == doctest::Approx(direct).epsilon(1e-14));
    CHECK(clausen(2.0, 1, 0.4) == doctest::Approx(std::cos(0.4)));
    // harmonic tail of C_1^N(0) is ln N + γ
    CHECK(clausen(1.0, 100000, 0.0) - std::log(100000.0) ==
          doctest::Approx(0.5772156649).epsilon(1e-5));
  }

  TEST_CASE("quasiparticle free energy") {
    CHECK(tfim_free_energy(10, 3.0, 1.2, 0.0) == doctest::Approx(10 * std::exp(-3.6)).epsilon(1e-12));
    for (double g : {0.3, 0.9, 1.6}) {
      const double ref = 10 * periodic_mean([&](double th) {
                           return std::exp(-2.0 * std::sqrt(1 + g * g - 2 * g * std::cos(th)));
                         });
      CAPTURE(g);
      CHECK(tfim_free_energy(10, 2.0, 1.0, g) == doctest::Approx(ref).epsilon(1e-8));
    }
  }

  TEST_CASE("quasiparticle cycle") {
    const auto free = tfim_cycle(10, 10.0, 20.0, 1.1, 1.0, 0.0);
    CHECK(free.work == doctest::Approx(10 * 0.1 * (std::exp(-11.0) - std::exp(-20.0))).epsilon(1e-10));
    CHECK(free.efficiency == doctest::Approx(1.0 - 1.0 / 1.1).epsilon(1e-10));
    const auto t = tfim_cycle(10, 10.0, 20.0, 1.1, 1.0, 0.5);
    CHECK(t.work == doctest::Approx(t.heat_hot - t.heat_cold).epsilon(1e-14));
    CHECK(t.work > free.work);
  }

  TEST_CASE("gap approximations") {
    CHECK(gap_approx({kInfiniteRange, 10, 1, 1.0, 0.3}) == doctest::Approx(0.7));
    CHECK(gap_approx({2.0, 10, 1, 1.0, 0.3}) == doctest::Approx(1.0 - 0.3 * kPi * kPi / 6));
    CHECK(gap_approx({1.0, 10, 1, 1.0, 0.3}) ==
          doctest::Approx(1.0 - 0.3 * (std::log(10.0) + 0.57721566490153286)));
  }

  TEST_CASE("exact fluctuation factors against direct integration") {
    // G_∞(x) = (1/π)∫ e^{x(cos θ − 1)} dθ
    for (double x : {0.2, 1.0, 4.0, 12.0}) {
      const double ref = periodic_mean([&](double th) { return std::exp(x * (std::cos(th) - 1)); });
      CAPTURE(x);
      CHECK(fluctuation_factor(kInfiniteRange, x, FluctuationForm::exact) ==
            doctest::Approx(ref).epsilon(1e-10));
    }
    // G_2(x) = ∫_0^1 e^{−x π² u(1−u)} du over the quadratic band edge
    for (double x : {0.1, 1.0, 5.0}) {
      double ref = 0.0;
      const int m = 200000;
      for (int k = 0; k < m; ++k) {
        const double u = (k + 0.5) / m;
        ref += std::exp(-x * kPi * kPi * u * (1 - u)) / m;
      }
      CAPTURE(x);
      CHECK(fluctuation_factor(2.0, x, FluctuationForm::exact) == doctest::Approx(ref).epsilon(1e-8));
    }
  }

  TEST_CASE("asymptotic fluctuation factors are the large-x limits") {
    for (double p : {2.0, 3.0, kInfiniteRange}) {
      const double x = 1e5;
      CAPTURE(p);
      CHECK(fluctuation_factor(p, x, FluctuationForm::exact) ==
            doctest::Approx(fluctuation_factor(p, x, FluctuationForm::asymptotic)).epsilon(1e-2));
    }
    CHECK(fluctuation_factor(1.0, 3.0, FluctuationForm::exact) == 1.0);
    CHECK(fluctuation_factor(kInfiniteRange, 0.0, FluctuationForm::asymptotic) == 1.0);
    CHECK(fluctuation_factor(4.0, 2.0, FluctuationForm::asymptotic) ==
          doctest::Approx(std::sqrt(1.0 / (4 * kPi * kPi * kPi / 6))));
    CHECK_THROWS_AS(fluctuation_factor(3.0, 0.01, FluctuationForm::exact), Error);
    CHECK_THROWS_AS(fluctuation_factor(2.5, 1.0, FluctuationForm::exact), Error);
  }

  TEST_CASE("two-level performance reduces to free spins at g = 0") {
    const auto t = two_level_performance(kInfiniteRange, 10, 1.1, 10, 20, 1.0, 0.0, 1.0);
    CHECK(t.work == doctest::Approx(10 * 0.1 * (std::exp(-11.0) - std::exp(-20.0))).epsilon(1e-12));
    CHECK(t.efficiency == doctest::Approx(1.0 - 1.0 / 1.1));
    CHECK(quadratic_free_energy({kInfiniteRange, 10, 10.0, 1.0, 0.0}) ==
          doctest::Approx(10 * std::exp(-10.0)));
  }

  TEST_CASE("second cumulant error is third order in beta") {
    ChainParams c{6, 1.5, 0.8, 1.0, Boundary::open};
    const CouplingMatrix j = coupling_matrix(c);
    const Spectrum s = chain_spectrum(c, 1.0, false);
    double err[2];
    for (int k = 0; k < 2; ++k) {
      const double beta = 0.01 * (k + 1);
      err[k] = high_t_expansion(beta, 1.0, j, 0.8).cumulant -
               ln_partition(s, beta, EnergyFrame::absolute);
    }
    CHECK(err[1] / err[0] == doctest::Approx(8.0).epsilon(0.05));
    // at g = 0 the cumulant carries the factor N that the printed form lacks
    const auto free = high_t_expansion(0.1, 1.0, j, 0.0);
    CHECK(free.cumulant - 6 * std::log(2.0) == doctest::Approx(6 * 0.01 / 8));
    CHECK(free.printed - 6 * std::log(2.0) == doctest::Approx(0.01 / 4));
  }

  TEST_CASE("mean field is exact without couplings") {
    ChainParams c{5, 2.0, 0.0, 1.0, Boundary::open};
    const CouplingMatrix j = coupling_matrix(c);
    CHECK(mean_field_free_energy(0.7, 1.3, j, 0.0) ==
          doctest::Approx(ln_partition(chain_spectrum(c, 1.3, false), 0.7, EnergyFrame::absolute))
              .epsilon(1e-13));
  }

  TEST_CASE("p = 1 work scaling") {
    const double a = p1_work_scaling(4, 0.2, 10, 1.1, 1.0);
    const double b = p1_work_scaling(8, 0.2, 10, 1.1, 1.0);
    CHECK(std::log(b / a) / std::log(2.0) == doctest::Approx(3.0));
  }
}
