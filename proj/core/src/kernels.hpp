// Copyright 2026 The qcloak Authors
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

// In-place amplitude updates shared by the dense-unitary builder and the
// statevector simulator.

#include <cstddef>
#include <utility>

#include "qcloak/linalg.hpp"

namespace qcloak::detail {

inline void apply_1q(Complex* amp, std::size_t dim, Qubit q, const Mat2& m) {
  const std::size_t stride = std::size_t{1} << q;
  const Complex m00 = m(0, 0), m01 = m(0, 1), m10 = m(1, 0), m11 = m(1, 1);
  for (std::size_t base = 0; base < dim; base += 2 * stride) {
    for (std::size_t i = base; i < base + stride; ++i) {
      Complex a0 = amp[i];
      Complex a1 = amp[i + stride];
      amp[i] = m00 * a0 + m01 * a1;
      amp[i + stride] = m10 * a0 + m11 * a1;
    }
  }
}

inline void apply_cx(Complex* amp, std::size_t dim, Qubit control, Qubit target) {
  const std::size_t cmask = std::size_t{1} << control;
  const std::size_t tmask = std::size_t{1} << target;
  for (std::size_t i = 0; i < dim; ++i) {
    if ((i & cmask) && !(i & tmask)) std::swap(amp[i], amp[i | tmask]);
  }
}

inline void apply_gate(Complex* amp, std::size_t dim, const Gate& g) {
  if (g.kind == GateKind::CX) {
    apply_cx(amp, dim, g.qubits[0], g.qubits[1]);
  } else {
    apply_1q(amp, dim, g.qubits[0], single_qubit_matrix(g.kind, g.angle));
  }
}

}  // namespace qcloak::detail
