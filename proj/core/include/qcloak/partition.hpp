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
#include <map>
#include <vector>

#include "qcloak/circuit.hpp"
#include "qcloak/linalg.hpp"

namespace qcloak {

/// A contiguous sub-circuit on one or two wires. `qubits` is sorted
/// ascending; local qubit i of the block unitary is qubits[i].
struct Block {
  std::vector<Qubit> qubits;
  std::vector<Gate> gates;
  std::size_t order_index = 0;

  bool is_two_qubit() const { return qubits.size() == 2; }
};

struct GateLocation {
  std::size_t block = 0;
  std::size_t position = 0;
};

/// Blocks in creation order, which is a valid topological order.
/// provenance[i] locates gate i of the source circuit.
struct BlockPartition {
  std::size_t num_qubits = 0;
  std::vector<Block> blocks;
  std::vector<GateLocation> provenance;
  std::vector<Qubit> measured_qubits;
};

/// Single pass over the gates with at most one open block per qubit.
/// A gate whose wires sit in blocks it cannot join completes those blocks
/// and opens a new one.
BlockPartition form_blocks(const Circuit& circuit);

/// Folds every one-qubit block into the preceding block on its wire, or
/// into the following one if it is the first on that wire. Wires that never
/// meet a two-qubit block keep a single one-qubit block.
BlockPartition coalesce_single_qubit_blocks(const BlockPartition& partition);

/// 2x2 or 4x4 unitary in the block's local ordering.
UnitaryMatrix block_unitary(const Block& block);

/// Blocks' gate lists concatenated in block order, with any block index in
/// `replacements` substituted by its fragment (global qubit labels).
/// Throws std::invalid_argument if a fragment touches a foreign wire.
Circuit reassemble(const BlockPartition& partition,
                   const std::map<std::size_t, std::vector<Gate>>& replacements = {});

}  // namespace qcloak
