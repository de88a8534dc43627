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

#include <array>
#include <cstddef>
#include <cstdint>
#include <string_view>
#include <vector>

namespace qcloak {

using Qubit = std::uint32_t;

/// The gate set understood by every pass: the IBM basis plus the logical RX.
enum class GateKind : std::uint8_t { X, SX, RZ, RX, CX };

std::string_view gate_name(GateKind kind);
constexpr bool is_rotation(GateKind kind) {
  return kind == GateKind::RZ || kind == GateKind::RX;
}
constexpr unsigned arity(GateKind kind) { return kind == GateKind::CX ? 2 : 1; }

/// One gate application. For CX, qubits[0] is the control and qubits[1] the
/// target. `angle` is meaningful only for rotations and is never reduced
/// modulo 2*pi.
struct Gate {
  GateKind kind = GateKind::X;
  std::array<Qubit, 2> qubits{0, 0};
  double angle = 0.0;

  static Gate x(Qubit q) { return {GateKind::X, {q, q}, 0.0}; }
  static Gate sx(Qubit q) { return {GateKind::SX, {q, q}, 0.0}; }
  static Gate rz(Qubit q, double theta) { return {GateKind::RZ, {q, q}, theta}; }
  static Gate rx(Qubit q, double theta) { return {GateKind::RX, {q, q}, theta}; }
  static Gate cx(Qubit control, Qubit target) {
    return {GateKind::CX, {control, target}, 0.0};
  }

  unsigned arity() const { return qcloak::arity(kind); }
  Qubit qubit() const { return qubits[0]; }
  bool acts_on(Qubit q) const {
    return qubits[0] == q || (kind == GateKind::CX && qubits[1] == q);
  }

  /// Exact equality, including bitwise-equal angles.
  bool operator==(const Gate& other) const;
};

/// An ordered gate list over `num_qubits` wires. Gate order is execution
/// order. `measured_qubits[j]` is the qubit read into classical bit j; an
/// empty list means every qubit is measured in index order.
class Circuit {
 public:
  Circuit() = default;
  explicit Circuit(std::size_t num_qubits) : num_qubits_(num_qubits) {}
  Circuit(std::size_t num_qubits, std::vector<Gate> gates,
          std::vector<Qubit> measured = {});

  std::size_t num_qubits() const { return num_qubits_; }
  const std::vector<Gate>& gates() const { return gates_; }
  const std::vector<Qubit>& measured_qubits() const { return measured_; }
  std::size_t size() const { return gates_.size(); }
  bool empty() const { return gates_.empty(); }

  /// Qubits in classical-bit order, expanding the empty "measure all" list.
  std::vector<Qubit> output_qubits() const;

  Circuit& append(const Gate& gate);
  Circuit& append(const std::vector<Gate>& gates);
  Circuit& x(Qubit q) { return append(Gate::x(q)); }
  Circuit& sx(Qubit q) { return append(Gate::sx(q)); }
  Circuit& rz(Qubit q, double theta) { return append(Gate::rz(q, theta)); }
  Circuit& rx(Qubit q, double theta) { return append(Gate::rx(q, theta)); }
  Circuit& cx(Qubit control, Qubit target) {
    return append(Gate::cx(control, target));
  }
  void set_measured(std::vector<Qubit> measured);
  void measure_all();

  bool operator==(const Circuit& other) const = default;

 private:
  void check(const Gate& gate) const;

  std::size_t num_qubits_ = 0;
  std::vector<Gate> gates_;
  std::vector<Qubit> measured_;
};

struct GateCounts {
  std::size_t cx = 0;
  std::size_t sx_plus_x = 0;
  std::size_t rz = 0;
  std::size_t rx = 0;

  bool operator==(const GateCounts&) const = default;
};

GateCounts gate_counts(const Circuit& circuit);
GateCounts gate_counts(const std::vector<Gate>& gates);

/// Number of CX gates on the longest dependency chain.
std::size_t cx_depth(const Circuit& circuit);

}  // namespace qcloak
