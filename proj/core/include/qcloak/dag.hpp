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

#include <cstddef>
#include <utility>
#include <vector>

#include "qcloak/circuit.hpp"

namespace qcloak {

/// Wire-dependency graph of a circuit. Node ids: wire sources are
/// [0, n), gate i is n + i, wire sinks are [n + g, 2n + g). Every edge
/// follows one wire from a node to the next node on that wire.
struct CircuitDag {
  std::size_t num_qubits = 0;
  std::size_t num_gates = 0;
  std::vector<std::pair<std::size_t, std::size_t>> edges;

  std::size_t num_nodes() const { return num_gates + 2 * num_qubits; }
  std::size_t source(Qubit q) const { return q; }
  std::size_t gate_node(std::size_t i) const { return num_qubits + i; }
  std::size_t sink(Qubit q) const { return num_qubits + num_gates + q; }

  std::vector<std::size_t> in_degrees() const;
  std::vector<std::size_t> out_degrees() const;
};

CircuitDag to_dag(const Circuit& circuit);

/// Kahn's algorithm; true iff every node is reachable in a topological order.
bool is_acyclic(const CircuitDag& dag);

}  // namespace qcloak
