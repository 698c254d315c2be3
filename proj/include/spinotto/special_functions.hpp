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

namespace spinotto::special {

inline constexpr double euler_gamma = 0.57721566490153286060651209008240243;

/** Modified Bessel function of the first kind, order zero. */
double bessel_i0(double x);

/** I0(x)·e^{−|x|}, finite for arbitrarily large |x|. */
double bessel_i0_scaled(double x);

/** Dawson's integral D(x) = e^{−x²} ∫_0^x e^{t²} dt. */
double dawson(double x);

double erf(double x);

/** Riemann zeta for real s ≠ 1. */
double zeta(double s);

/** H_n = Σ_{k=1}^n 1/k; H_0 = 0. */
double harmonic_number(int n);

}  // namespace spinotto::special
