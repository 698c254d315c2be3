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

#include "spinotto/analytic.hpp"

#include <boost/math/quadrature/gauss_kronrod.hpp>
#include <cmath>
#include <complex>
#include <numbers>

#include "spinotto/error.hpp"
#include "spinotto/special_functions.hpp"

namespace spinotto {

namespace {

constexpr double kQuadTolerance = 1e-13;
constexpr unsigned kQuadDepth = 20;

template <class F>
double integrate(F f, double a, double b) {
  return boost::math::quadrature::gauss_kronrod<double, 61>::integrate(f, a, b, kQuadDepth,
                                                                       kQuadTolerance);
}

double dispersion(double omega, double g, double theta) {
  return std::sqrt(std::max(0.0, omega * omega + g * g - 2.0 * omega * g * std::cos(theta)));
}

// Re Li_s(e^{iθ}) for 0 < θ ≤ π from the expansion of the polylogarithm about μ = 0
double clausen_series(double s, double theta) {
  const cplx mu(0.0, theta);
  const bool integer = s == std::floor(s);
  const int si = static_cast<int>(s);
  cplx sum = 0.0;
  if (integer) {
    double fact = 1.0;
    for (int k = 2; k < si; ++k) fact *= k;
    sum += std::pow(mu, si - 1) / fact * (special::harmonic_number(si - 1) - std::log(-mu));
  } else {
    sum += std::tgamma(1.0 - s) * std::pow(-mu, s - 1.0);
  }
  cplx power = 1.0;  // μ^k / k!
  int quiet = 0;
  for (int k = 0; k < 160; ++k) {
    if (!(integer && k == si - 1)) {
      const cplx term = special::zeta(s - k) * power;
      sum += term;
      quiet = std::abs(term) < 1e-17 * std::abs(sum) ? quiet + 1 : 0;
      if (k > s + 4 && quiet >= 3) break;
    }
    power *= mu / static_cast<double>(k + 1);
  }
  return sum.real();
}

}  // namespace

double clausen(double p, double n, double theta) {
  require(p >= 1.0, "clausen: p must be at least 1");
  require(n >= 1.0, "clausen: N must be at least 1");
  require(std::isfinite(theta), "clausen: theta must be finite");
  if (std::isinf(p)) return std::cos(theta);
  if (std::isfinite(n)) {
    require(n == std::floor(n), "clausen: finite N must be an integer");
    double sum = 0.0;
    for (int m = static_cast<int>(n); m >= 1; --m) sum += std::cos(m * theta) / std::pow(m, p);
    return sum;
  }
  double t = std::remainder(theta, 2.0 * std::numbers::pi);
  t = std::abs(t);
  if (p == 1.0) {
    if (t == 0.0) fail(ErrorKind::numerical, "clausen: p = 1 diverges at theta = 0");
    return -std::log(std::abs(2.0 * std::sin(0.5 * t)));
  }
  if (t == 0.0) return special::zeta(p);
  return clausen_series(p, t);
}

double tfim_free_energy(int n, double beta, double omega, double g) {
  require(n >= 1, "tfim_free_energy: N must be positive");
  require(beta >= 0.0, "tfim_free_energy: beta must be non-negative");
  const double integral = integrate(
      [&](double th) { return std::exp(-beta * dispersion(omega, g, th)); }, 0.0,
      std::numbers::pi);
  return n / std::numbers::pi * integral;
}

TfimCycle tfim_cycle(int n, double beta_h, double beta_c, double r, double omega0, double g) {
  require(n >= 1 && r > 1.0 && beta_h > 0.0 && beta_c >= beta_h && omega0 > 0.0 && g >= 0.0,
          "tfim_cycle: invalid parameters");
  const double hot = r * omega0;
  const double cold = omega0;
  const auto point = [&](double level, double occupied, double beta) {
    return n / std::numbers::pi *
           integrate(
               [&](double th) {
                 return dispersion(level, g, th) * std::exp(-beta * dispersion(occupied, g, th));
               },
               0.0, std::numbers::pi);
  };
  TfimCycle out;
  out.e1 = point(hot, hot, beta_h);
  out.e2 = point(cold, hot, beta_h);
  out.e3 = point(cold, cold, beta_c);
  out.e4 = point(hot, cold, beta_c);
  out.heat_hot = out.e1 - out.e4;
  out.heat_cold = out.e2 - out.e3;
  out.work = out.heat_hot - out.heat_cold;
  out.efficiency = out.heat_hot > 0.0 ? out.work / out.heat_hot : 0.0;
  return out;
}

double gap_approx(const QuadraticModel& model) {
  require(model.n >= 1, "gap_approx: N must be positive");
  if (std::isinf(model.p)) return model.omega - model.g;
  if (model.p == 1.0)
    return model.omega - model.g * (std::log(static_cast<double>(model.n)) + special::euler_gamma);
  require(model.p > 1.0, "gap_approx: p must be at least 1");
  return model.omega - model.g * special::zeta(model.p);
}

double fluctuation_factor(double p, double x, FluctuationForm form) {
  require(x >= 0.0 && std::isfinite(x), "fluctuation_factor: beta*g must be non-negative");
  const bool exact = form == FluctuationForm::exact;
  if (p == 1.0) return 1.0;
  if (x == 0.0) return 1.0;
  if (std::isinf(p))
    return exact ? special::bessel_i0_scaled(x) : 1.0 / std::sqrt(2.0 * std::numbers::pi * x);
  if (p == 2.0) {
    const double y = std::sqrt(x * std::numbers::pi * std::numbers::pi);
    return exact ? 2.0 / y * special::dawson(0.5 * y) : 1.0 / (3.0 * x * special::zeta(2.0));
  }
  if (p == 3.0) {
    const double log_arg = 3.0 + std::log(x);
    if (log_arg <= 0.0)
      fail(ErrorKind::numerical, "fluctuation_factor: p = 3 needs beta*g > e^-3");
    const double base = 1.0 / std::sqrt(std::numbers::pi * x * log_arg);
    return exact ? base * special::erf(0.5 * std::numbers::pi * std::sqrt(x * log_arg)) : base;
  }
  if (p > 3.0) return std::sqrt(1.0 / (2.0 * std::numbers::pi * x * special::zeta(p - 2.0)));
  fail(ErrorKind::invalid_argument,
       "fluctuation_factor: p must be 1, 2, 3, greater than 3, or infinity");
}

double quadratic_free_energy(const QuadraticModel& model, FluctuationForm form) {
  require(model.beta > 0.0 && model.g >= 0.0, "quadratic_free_energy: need beta > 0, g >= 0");
  const double delta = gap_approx(model);
  return model.n * fluctuation_factor(model.p, model.beta * model.g, form) *
         std::exp(-model.beta * delta);
}

TwoLevelPerformance two_level_performance(double p, int n, double r, double beta_h, double beta_c,
                                          double omega0, double g, double g_c,
                                          FluctuationForm form) {
  require(n >= 1 && r > 1.0 && beta_h > 0.0 && beta_c >= beta_h && omega0 > 0.0 && g >= 0.0 &&
              g_c > 0.0,
          "two_level_performance: invalid parameters");
  const auto delta = [&](double omega) { return omega - omega0 * g / g_c; };
  const double d1 = delta(r * omega0);
  const double d2 = delta(omega0);
  TwoLevelPerformance out;
  out.work = n * (r - 1.0) * omega0 * fluctuation_factor(p, beta_h * g, form) *
             (std::exp(-beta_h * d1) - std::exp(-beta_c * d2));
  out.efficiency = 1.0 - d2 / d1;
  return out;
}

HighTemperatureExpansion high_t_expansion(double beta, double omega, const CouplingMatrix& j,
                                          double g) {
  const int n = j.size();
  const double ln_z_inf = n * std::numbers::ln2;
  double omega_sq = 0.0;
  double pair_sq = 0.0;
  for (int a = 0; a < n; ++a) {
    double row = 0.0;
    for (int b = 0; b < n; ++b) {
      if (b == a) continue;
      row += j(a, b);
      if (b > a) pair_sq += j(a, b) * j(a, b);
    }
    omega_sq += 0.25 * row * row;
  }
  HighTemperatureExpansion out;
  const double b2 = beta * beta;
  out.printed = ln_z_inf + b2 * omega * omega / 4.0 + b2 * g * g * omega_sq / 4.0;
  // Tr(H²)/2^N = Nω²/4 + (g²/4) Σ_{a<b} J_ab²
  out.cumulant = ln_z_inf + 0.5 * b2 * (n * omega * omega / 4.0 + 0.25 * g * g * pair_sq);
  return out;
}

double mean_field_free_energy(double beta, double omega, const CouplingMatrix& j, double g) {
  const int n = j.size();
  double total = 0.0;
  for (int a = 0; a < n; ++a) {
    double omega_i = 0.0;
    for (int b = 0; b < n; ++b)
      if (b != a) omega_i += 0.5 * j(a, b);
    const double half = 0.5 * beta * std::sqrt(omega * omega + g * g * omega_i * omega_i);
    // ln(2 cosh h) = h + ln(1 + e^{-2h})
    total += half + std::log1p(std::exp(-2.0 * half));
  }
  return total;
}

double p1_work_scaling(int n, double g, double beta_h, double r, double omega0) {
  require(n >= 1 && r > 1.0 && beta_h > 0.0 && omega0 > 0.0 && g >= 0.0,
          "p1_work_scaling: invalid parameters");
  return omega0 * (r - 1.0) * std::exp(-beta_h * omega0) *
         std::exp(beta_h * g * special::euler_gamma) *
         std::pow(static_cast<double>(n), 1.0 + beta_h * g);
}

}  // namespace spinotto
