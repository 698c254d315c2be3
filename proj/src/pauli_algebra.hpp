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

// Minimal Pauli-string algebra used to evaluate the counterdiabatic action
// without materializing 2^N matrices.

#include <Eigen/Dense>
#include <complex>
#include <cstdint>
#include <map>
#include <utility>

namespace spinotto::detail {

using cplx = std::complex<double>;

/** Product of single-site Paulis; site i is X if x bit set, Z if z bit set, Y if both. */
struct PauliString {
  std::uint32_t x = 0;
  std::uint32_t z = 0;

  friend bool operator<(const PauliString& a, const PauliString& b) {
    return std::pair(a.x, a.z) < std::pair(b.x, b.z);
  }
};

/** Linear combination of Pauli strings. */
class PauliSum {
 public:
  void add(const PauliString& s, cplx coeff);
  void add(const PauliSum& other, cplx scale = 1.0);
  [[nodiscard]] const std::map<PauliString, cplx>& terms() const { return terms_; }
  /** Tr(A†A) / 2^N */
  [[nodiscard]] double norm2() const;
  /** Re Tr(A†B) / 2^N */
  [[nodiscard]] double real_inner(const PauliSum& other) const;

 private:
  std::map<PauliString, cplx> terms_;
};

/** (phase, string) with P·Q = phase · string. */
std::pair<cplx, PauliString> multiply(const PauliString& p, const PauliString& q);

/** [A, B] */
PauliSum commutator(const PauliSum& a, const PauliSum& b);

PauliString single(int site, char axis);
PauliString pair(int a, char axis_a, int b, char axis_b);

}  // namespace spinotto::detail
