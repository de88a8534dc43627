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

#include "qcloak/linalg.hpp"

#include <cmath>
#include <stdexcept>
#include <string>

#include "kernels.hpp"
#include "qcloak/errors.hpp"

namespace qcloak {

Mat2 single_qubit_matrix(GateKind kind, double angle) {
  using namespace std::complex_literals;
  Mat2 m;
  switch (kind) {
    case GateKind::X:
      m << 0.0, 1.0, 1.0, 0.0;
      break;
    case GateKind::SX:
      m << 0.5 + 0.5i, 0.5 - 0.5i, 0.5 - 0.5i, 0.5 + 0.5i;
      break;
    case GateKind::RZ:
      m << std::exp(-0.5i * angle), 0.0, 0.0, std::exp(0.5i * angle);
      break;
    case GateKind::RX: {
      double c = std::cos(angle / 2), s = std::sin(angle / 2);
      m << c, -1i * s, -1i * s, c;
      break;
    }
    case GateKind::CX:
      throw std::invalid_argument("cx is not a one-qubit gate");
  }
  return m;
}

UnitaryMatrix gate_unitary(const Gate& gate) {
  if (gate.kind != GateKind::CX) return single_qubit_matrix(gate.kind, gate.angle);
  return gates_unitary(2, {Gate::cx(0, 1)});
}

UnitaryMatrix kron(const UnitaryMatrix& a, const UnitaryMatrix& b) {
  UnitaryMatrix out(a.rows() * b.rows(), a.cols() * b.cols());
  for (Eigen::Index i = 0; i < a.rows(); ++i) {
    for (Eigen::Index j = 0; j < a.cols(); ++j) {
      out.block(i * b.rows(), j * b.cols(), b.rows(), b.cols()) = a(i, j) * b;
    }
  }
  return out;
}

UnitaryMatrix gates_unitary(std::size_t num_qubits, const std::vector<Gate>& gates) {
  if (num_qubits > kMaxUnitaryQubits) {
    throw CapacityError("dense unitary limited to " + std::to_string(kMaxUnitaryQubits) +
                        " qubits, got " + std::to_string(num_qubits));
  }
  const std::size_t dim = std::size_t{1} << num_qubits;
  UnitaryMatrix u = UnitaryMatrix::Identity(dim, dim);
  for (const Gate& g : gates) {
    if (g.qubits[0] >= num_qubits || (g.kind == GateKind::CX && g.qubits[1] >= num_qubits)) {
      throw std::out_of_range("gate qubit outside unitary register");
    }
    // Column-major storage: each column is a contiguous state vector.
    for (std::size_t col = 0; col < dim; ++col) {
      detail::apply_gate(u.data() + col * dim, dim, g);
    }
  }
  return u;
}

UnitaryMatrix circuit_unitary(const Circuit& circuit) {
  return gates_unitary(circuit.num_qubits(), circuit.gates());
}

UnitaryMatrix local_unitary(const std::vector<Gate>& gates, const std::vector<Qubit>& wires) {
  std::vector<Gate> local;
  local.reserve(gates.size());
  auto map = [&](Qubit q) -> Qubit {
    for (std::size_t i = 0; i < wires.size(); ++i) {
      if (wires[i] == q) return static_cast<Qubit>(i);
    }
    throw std::invalid_argument("gate touches a wire outside the local set");
  };
  for (Gate g : gates) {
    g.qubits[0] = map(g.qubits[0]);
    g.qubits[1] = g.kind == GateKind::CX ? map(g.qubits[1]) : g.qubits[0];
    local.push_back(g);
  }
  return gates_unitary(wires.size(), local);
}

double phase_distance(const UnitaryMatrix& a, const UnitaryMatrix& b) {
  if (a.rows() != b.rows() || a.cols() != b.cols()) {
    throw std::invalid_argument("matrix dimension mismatch");
  }
  Eigen::Index r = 0, c = 0;
  b.cwiseAbs().maxCoeff(&r, &c);
  Complex phase = 1.0;
  if (std::abs(b(r, c)) > 0 && std::abs(a(r, c)) > 0) {
    phase = a(r, c) / b(r, c);
    phase /= std::abs(phase);
  }
  return (a - phase * b).cwiseAbs().maxCoeff();
}

bool equal_up_to_global_phase(const UnitaryMatrix& a, const UnitaryMatrix& b, double tol) {
  return phase_distance(a, b) <= tol;
}

bool is_unitary(const UnitaryMatrix& m, double tol) {
  if (m.rows() != m.cols()) return false;
  UnitaryMatrix p = m.adjoint() * m;
  return (p - UnitaryMatrix::Identity(m.rows(), m.cols())).cwiseAbs().maxCoeff() <= tol;
}

}  // namespace qcloak
