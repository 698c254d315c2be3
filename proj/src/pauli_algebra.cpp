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

#include "pauli_algebra.hpp"

#include <bit>

#include "spinotto/error.hpp"

namespace spinotto::detail {

void PauliSum::add(const PauliString& s, cplx coeff) {
  if (coeff == cplx(0.0)) return;
  auto [it, inserted] = terms_.emplace(s, coeff);
  if (!inserted) {
    it->second += coeff;
    if (std::abs(it->second) == 0.0) terms_.erase(it);
  }
}

void PauliSum::add(const PauliSum& other, cplx scale) {
  for (const auto& [s, c] : other.terms_) add(s, scale * c);
}

double PauliSum::norm2() const {
  double s = 0.0;
  for (const auto& [str, c] : terms_) s += std::norm(c);
  return s;
}

double PauliSum::real_inner(const PauliSum& other) const {
  double s = 0.0;
  for (const auto& [str, c] : terms_) {
    auto it = other.terms_.find(str);
    if (it != other.terms_.end()) s += (std::conj(c) * it->second).real();
  }
  return s;
}

std::pair<cplx, PauliString> multiply(const PauliString& p, const PauliString& q) {
  // single-site labels: 0=I 1=X 2=Y 3=Z; product phase from the Levi-Civita cycle
  static constexpr int kPhase[4][4] = {
      {0, 0, 0, 0}, {0, 0, 1, 3}, {0, 3, 0, 1}, {0, 1, 3, 0}};
  int quarter_turns = 0;
  std::uint32_t both = (p.x | p.z) & (q.x | q.z);
  while (both) {
    const int site = std::countr_zero(both);
    both &= both - 1;
    const auto label = [site](const PauliString& s) {
      const bool bx = (s.x >> site) & 1u;
      const bool bz = (s.z >> site) & 1u;
      return bx ? (bz ? 2 : 1) : 3;
    };
    quarter_turns += kPhase[label(p)][label(q)];
  }
  static constexpr cplx kTurns[4] = {{1, 0}, {0, 1}, {-1, 0}, {0, -1}};
  return {kTurns[quarter_turns & 3], PauliString{p.x ^ q.x, p.z ^ q.z}};
}

PauliSum commutator(const PauliSum& a, const PauliSum& b) {
  PauliSum out;
  for (const auto& [sa, ca] : a.terms()) {
    for (const auto& [sb, cb] : b.terms()) {
      auto [phase_ab, prod] = multiply(sa, sb);
      auto [phase_ba, prod2] = multiply(sb, sa);
      const cplx diff = phase_ab - phase_ba;
      if (std::abs(diff) > 0.0) out.add(prod, ca * cb * diff);
    }
  }
  return out;
}

PauliString single(int site, char axis) {
  const std::uint32_t bit = 1u << site;
  switch (axis) {
    case 'x':
      return {bit, 0};
    case 'y':
      return {bit, bit};
    case 'z':
      return {0, bit};
    default:
      fail(ErrorKind::invalid_argument, "unknown Pauli axis");
  }
}

PauliString pair(int a, char axis_a, int b, char axis_b) {
  const PauliString pa = single(a, axis_a);
  const PauliString pb = single(b, axis_b);
  return {pa.x | pb.x, pa.z | pb.z};
}

}  // namespace spinotto::detail
