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

#include "qcloak/dag.hpp"

#include <queue>

namespace qcloak {

std::vector<std::size_t> CircuitDag::in_degrees() const {
  std::vector<std::size_t> deg(num_nodes(), 0);
  for (const auto& e : edges) ++deg[e.second];
  return deg;
}

std::vector<std::size_t> CircuitDag::out_degrees() const {
  std::vector<std::size_t> deg(num_nodes(), 0);
  for (const auto& e : edges) ++deg[e.first];
  return deg;
}

CircuitDag to_dag(const Circuit& circuit) {
  CircuitDag dag;
  dag.num_qubits = circuit.num_qubits();
  dag.num_gates = circuit.size();
  dag.edges.reserve(dag.num_gates * 2 + dag.num_qubits);
  std::vector<std::size_t> last(dag.num_qubits);
  for (Qubit q = 0; q < dag.num_qubits; ++q) last[q] = dag.source(q);
  for (std::size_t i = 0; i < circuit.size(); ++i) {
    const Gate& g = circuit.gates()[i];
    std::size_t node = dag.gate_node(i);
    for (unsigned k = 0; k < g.arity(); ++k) {
      Qubit q = g.qubits[k];
      dag.edges.emplace_back(last[q], node);
      last[q] = node;
    }
  }
  for (Qubit q = 0; q < dag.num_qubits; ++q) dag.edges.emplace_back(last[q], dag.sink(q));
  return dag;
}

bool is_acyclic(const CircuitDag& dag) {
  std::vector<std::vector<std::size_t>> succ(dag.num_nodes());
  for (const auto& [u, v] : dag.edges) succ[u].push_back(v);
  std::vector<std::size_t> indeg = dag.in_degrees();
  std::queue<std::size_t> ready;
  for (std::size_t v = 0; v < indeg.size(); ++v) {
    if (indeg[v] == 0) ready.push(v);
  }
  std::size_t seen = 0;
  while (!ready.empty()) {
    std::size_t u = ready.front();
    ready.pop();
    ++seen;
    for (std::size_t v : succ[u]) {
      if (--indeg[v] == 0) ready.push(v);
    }
  }
  return seen == dag.num_nodes();
}

}  // namespace qcloak
