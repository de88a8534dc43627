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

#include "qcloak/circuit.hpp"

#include <algorithm>
#include <cmath>
#include <numeric>
#include <stdexcept>
#include <string>

namespace qcloak {

std::string_view gate_name(GateKind kind) {
  switch (kind) {
    case GateKind::X:
      return "x";
    case GateKind::SX:
      return "sx";
    case GateKind::RZ:
      return "rz";
    case GateKind::RX:
      return "rx";
    case GateKind::CX:
      return "cx";
  }
  return "?";
}

bool Gate::operator==(const Gate& other) const {
  if (kind != other.kind || qubits[0] != other.qubits[0]) return false;
  if (kind == GateKind::CX && qubits[1] != other.qubits[1]) return false;
  if (is_rotation(kind) && angle != other.angle) return false;
  return true;
}

Circuit::Circuit(std::size_t num_qubits, std::vector<Gate> gates,
                 std::vector<Qubit> measured)
    : num_qubits_(num_qubits) {
  gates_.reserve(gates.size());
  for (const Gate& g : gates) append(g);
  set_measured(std::move(measured));
}

void Circuit::check(const Gate& gate) const {
  if (gate.qubits[0] >= num_qubits_ ||
      (gate.kind == GateKind::CX && gate.qubits[1] >= num_qubits_)) {
    throw std::out_of_range("gate " + std::string(gate_name(gate.kind)) +
                            " references qubit outside register of size " +
                            std::to_string(num_qubits_));
  }
  if (gate.kind == GateKind::CX && gate.qubits[0] == gate.qubits[1]) {
    throw std::invalid_argument("cx requires two distinct qubits");
  }
  if (is_rotation(gate.kind) && !std::isfinite(gate.angle)) {
    throw std::invalid_argument("rotation angle must be finite");
  }
}

Circuit& Circuit::append(const Gate& gate) {
  check(gate);
  Gate g = gate;
  if (g.kind != GateKind::CX) g.qubits[1] = g.qubits[0];
  if (!is_rotation(g.kind)) g.angle = 0.0;
  gates_.push_back(g);
  return *this;
}

Circuit& Circuit::append(const std::vector<Gate>& gates) {
  for (const Gate& g : gates) append(g);
  return *this;
}

void Circuit::set_measured(std::vector<Qubit> measured) {
  for (Qubit q : measured) {
    if (q >= num_qubits_) throw std::out_of_range("measured qubit out of range");
  }
  measured_ = std::move(measured);
}

void Circuit::measure_all() {
  measured_.resize(num_qubits_);
  std::iota(measured_.begin(), measured_.end(), Qubit{0});
}

std::vector<Qubit> Circuit::output_qubits() const {
  if (!measured_.empty()) return measured_;
  std::vector<Qubit> all(num_qubits_);
  std::iota(all.begin(), all.end(), Qubit{0});
  return all;
}

GateCounts gate_counts(const std::vector<Gate>& gates) {
  GateCounts counts;
  for (const Gate& g : gates) {
    switch (g.kind) {
      case GateKind::CX:
        ++counts.cx;
        break;
      case GateKind::SX:
      case GateKind::X:
        ++counts.sx_plus_x;
        break;
      case GateKind::RZ:
        ++counts.rz;
        break;
      case GateKind::RX:
        ++counts.rx;
        break;
    }
  }
  return counts;
}

GateCounts gate_counts(const Circuit& circuit) {
  return gate_counts(circuit.gates());
}

std::size_t cx_depth(const Circuit& circuit) {
  std::vector<std::size_t> depth(circuit.num_qubits(), 0);
  std::size_t best = 0;
  for (const Gate& g : circuit.gates()) {
    if (g.kind != GateKind::CX) continue;
    std::size_t d = std::max(depth[g.qubits[0]], depth[g.qubits[1]]) + 1;
    depth[g.qubits[0]] = depth[g.qubits[1]] = d;
    best = std::max(best, d);
  }
  return best;
}

}  // namespace qcloak
