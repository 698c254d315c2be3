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
#include <utility>
#include <vector>

#include "../reference_values.hpp"
#include "doctest.h"
#include "spinotto/error.hpp"
#include "spinotto/special_functions.hpp"

namespace sp = spinotto::special;

namespace {

using reference::Table;

template <class F>
void check_table(const Table& table, F f) {
  for (const auto& [x, want] : table) {
    CAPTURE(x);
    CHECK(f(x) == doctest::Approx(want).epsilon(1e-10));
  }
}

}  // namespace

TEST_SUITE("special_functions") {
  TEST_CASE("zeta matches pinned values") { check_table(reference::kZeta, sp::zeta); }

  TEST_CASE("zeta rejects the pole") { CHECK_THROWS_AS(sp::zeta(1.0), spinotto::Error); }

  TEST_CASE("scaled Bessel I0 matches pinned values across the branch switch") {
    check_table(reference::kBesselI0Scaled, sp::bessel_i0_scaled);
    CHECK(sp::bessel_i0_scaled(-5.0) == doctest::Approx(sp::bessel_i0_scaled(5.0)).epsilon(1e-15));
    CHECK(sp::bessel_i0(0.0) == 1.0);
    CHECK(sp::bessel_i0(2.5) == doctest::Approx(0.27004644161220273956 * std::exp(2.5)).epsilon(1e-10));
  }

  TEST_CASE("Dawson matches pinned values on both sides of the series cutoff") {
    check_table(reference::kDawson, sp::dawson);
    CHECK(sp::dawson(0.0) == 0.0);
    CHECK(sp::dawson(-1.5) == doctest::Approx(-0.42824907108539862548).epsilon(1e-10));
  }

  TEST_CASE("erf matches pinned values") {
    check_table(reference::kErf, sp::erf);
    CHECK(sp::erf(-1.0) == doctest::Approx(-0.84270079294971486934).epsilon(1e-10));
  }

  TEST_CASE("harmonic numbers") {
    CHECK(sp::harmonic_number(0) == 0.0);
    CHECK(sp::harmonic_number(1) == 1.0);
    CHECK(sp::harmonic_number(4) == doctest::Approx(25.0 / 12.0).epsilon(1e-15));
    CHECK(sp::harmonic_number(100000) - std::log(100000.0) ==
          doctest::Approx(sp::euler_gamma).epsilon(1e-5));
  }
}
