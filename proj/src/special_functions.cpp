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

#include "spinotto/special_functions.hpp"

#include <cmath>
#include <numbers>

#include "spinotto/error.hpp"

namespace spinotto::special {

namespace {

constexpr double kI0AsymptoticFrom = 50.0;
constexpr double kDawsonAsymptoticFrom = 6.0;

double i0_scaled_asymptotic(double x) {
  // e^{-x} I0(x) ~ (2πx)^{-1/2} Σ_k [(2k-1)!!]² / (k! (8x)^k)
  double term = 1.0;
  double sum = 1.0;
  for (int k = 1; k < 60; ++k) {
    const double next = term * (2.0 * k - 1.0) * (2.0 * k - 1.0) / (8.0 * k * x);
    if (std::abs(next) > std::abs(term)) break;
    term = next;
    sum += term;
    if (std::abs(term) < 1e-17 * sum) break;
  }
  return sum / std::sqrt(2.0 * std::numbers::pi * x);
}

}  // namespace

double bessel_i0(double x) {
  const double ax = std::abs(x);
  if (ax < kI0AsymptoticFrom) return std::cyl_bessel_i(0.0, ax);
  return i0_scaled_asymptotic(ax) * std::exp(ax);
}

double bessel_i0_scaled(double x) {
  const double ax = std::abs(x);
  if (ax < kI0AsymptoticFrom) return std::cyl_bessel_i(0.0, ax) * std::exp(-ax);
  return i0_scaled_asymptotic(ax);
}

double dawson(double x) {
  const double ax = std::abs(x);
  const double sign = x < 0 ? -1.0 : 1.0;
  if (ax < kDawsonAsymptoticFrom) {
    // e^{-x²} Σ_k x^{2k+1} / (k! (2k+1)); all terms positive
    const double x2 = ax * ax;
    double power = ax;
    double sum = ax;
    for (int k = 1; k < 400; ++k) {
      power *= x2 / k;
      const double term = power / (2.0 * k + 1.0);
      sum += term;
      if (term < 1e-17 * sum) break;
    }
    return sign * sum * std::exp(-x2);
  }
  // D(x) ~ (2x)^{-1} Σ_k (2k-1)!! / (2x²)^k
  const double u = 1.0 / (2.0 * ax * ax);
  double term = 1.0;
  double sum = 1.0;
  for (int k = 1; k < 80; ++k) {
    const double next = term * (2.0 * k - 1.0) * u;
    if (next > term) break;
    term = next;
    sum += term;
    if (term < 1e-17 * sum) break;
  }
  return sign * sum / (2.0 * ax);
}

double erf(double x) { return std::erf(x); }

double zeta(double s) {
  if (s == 1.0) fail(ErrorKind::invalid_argument, "zeta: pole at s = 1");
  return std::riemann_zeta(s);
}

double harmonic_number(int n) {
  require(n >= 0, "harmonic_number: n must be non-negative");
  double h = 0.0;
  for (int k = n; k >= 1; --k) h += 1.0 / k;
  return h;
}

}  // namespace spinotto::special
