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

#include <complex>
#include <cstddef>
#include <vector>

#include <Eigen/Dense>

#include "qcloak/circuit.hpp"

namespace qcloak {

using Complex = std::complex<double>;
using UnitaryMatrix = Eigen::MatrixXcd;
using Mat2 = Eigen::Matrix2cd;
using Mat4 = Eigen::Matrix4cd;

/// Default tolerance for unitary equivalence checks.
inline constexpr double kEquivTol = 1e-9;
/// Largest register for which dense unitaries are built.
inline constexpr std::size_t kMaxUnitaryQubits = 12;

/// 2x2 matrix of a one-qubit gate kind.
Mat2 single_qubit_matrix(GateKind kind, double angle = 0.0);

/// 2x2 for one-qubit gates. For CX, a 4x4 on local wires (control = local
/// qubit 0, target = local qubit 1), little-endian: index = b0 + 2*b1.
UnitaryMatrix gate_unitary(const Gate& gate);

/// Standard Kronecker product: `a` acts on the high-order local qubits.
UnitaryMatrix kron(const UnitaryMatrix& a, const UnitaryMatrix& b);

/// Product of the embedded gate unitaries, later gates on the left.
/// Throws CapacityError when num_qubits exceeds kMaxUnitaryQubits.
UnitaryMatrix circuit_unitary(const Circuit& circuit);

/// Same as circuit_unitary for a bare gate list over `num_qubits` wires.
UnitaryMatrix gates_unitary(std::size_t num_qubits, const std::vector<Gate>& gates);

/// Unitary of `gates` with global wire wires[i] mapped to local qubit i.
UnitaryMatrix local_unitary(const std::vector<Gate>& gates,
                            const std::vector<Qubit>& wires);

/// Max-abs distance between `a` and e^{i phi} b, with phi taken from the
/// largest-magnitude entry of b. Throws std::invalid_argument on shape
/// mismatch.
double phase_distance(const UnitaryMatrix& a, const UnitaryMatrix& b);

bool equal_up_to_global_phase(const UnitaryMatrix& a, const UnitaryMatrix& b,
                              double tol = kEquivTol);

/// max-abs |U^dagger U - I| <= tol.
bool is_unitary(const UnitaryMatrix& m, double tol = 1e-10);

}  // namespace qcloak
