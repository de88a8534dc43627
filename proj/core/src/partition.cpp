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

#include "qcloak/partition.hpp"

#include <algorithm>
#include <limits>
#include <optional>
#include <stdexcept>

namespace qcloak {

namespace {

constexpr std::size_t kNone = std::numeric_limits<std::size_t>::max();

bool block_has(const Block& b, Qubit q) {
  return std::find(b.qubits.begin(), b.qubits.end(), q) != b.qubits.end();
}

void renumber_blocks(BlockPartition& p) {
  for (std::size_t b = 0; b < p.blocks.size(); ++b) p.blocks[b].order_index = b;
}

}  // namespace

BlockPartition form_blocks(const Circuit& circuit) {
  BlockPartition p;
  p.num_qubits = circuit.num_qubits();
  p.measured_qubits = circuit.measured_qubits();
  p.provenance.resize(circuit.size());
  std::vector<std::size_t> open(circuit.num_qubits(), kNone);

  auto complete = [&](std::size_t b) {
    for (Qubit q : p.blocks[b].qubits) open[q] = kNone;
  };
  auto create = [&](std::vector<Qubit> qubits) {
    std::sort(qubits.begin(), qubits.end());
    std::size_t id = p.blocks.size();
    p.blocks.push_back(Block{qubits, {}, id});
    for (Qubit q : qubits) open[q] = id;
    return id;
  };
  auto add = [&](std::size_t b, std::size_t gate_index) {
    p.provenance[gate_index] = {b, p.blocks[b].gates.size()};
    p.blocks[b].gates.push_back(circuit.gates()[gate_index]);
  };

  for (std::size_t i = 0; i < circuit.size(); ++i) {
    const Gate& g = circuit.gates()[i];
    if (g.kind != GateKind::CX) {
      std::size_t b = open[g.qubits[0]];
      if (b == kNone) b = create({g.qubits[0]});
      add(b, i);
      continue;
    }
    Qubit q1 = g.qubits[0], q2 = g.qubits[1];
    std::size_t b1 = open[q1], b2 = open[q2];
    if (b1 != kNone && b1 == b2) {
      add(b1, i);
      continue;
    }
    if (b1 != kNone) complete(b1);
    if (b2 != kNone) complete(b2);
    add(create({q1, q2}), i);
  }
  return p;
}

BlockPartition coalesce_single_qubit_blocks(const BlockPartition& partition) {
  const std::size_t nb = partition.blocks.size();
  // Per wire, the blocks touching it in order.
  std::vector<std::vector<std::size_t>> on_wire(partition.num_qubits);
  for (std::size_t b = 0; b < nb; ++b) {
    for (Qubit q : partition.blocks[b].qubits) on_wire[q].push_back(b);
  }
  // target[b] is the block that absorbs b; prepend[b] tells which end.
  std::vector<std::size_t> target(nb, kNone);
  std::vector<bool> prepend(nb, false);
  for (std::size_t b = 0; b < nb; ++b) {
    const Block& blk = partition.blocks[b];
    if (blk.is_two_qubit()) continue;
    const auto& seq = on_wire[blk.qubits[0]];
    auto pos = std::find(seq.begin(), seq.end(), b) - seq.begin();
    std::optional<std::size_t> host;
    for (auto k = pos - 1; k >= 0; --k) {
      if (partition.blocks[seq[k]].is_two_qubit()) {
        host = seq[k];
        break;
      }
    }
    if (host) {
      target[b] = *host;
      continue;
    }
    for (auto k = pos + 1; k < static_cast<std::ptrdiff_t>(seq.size()); ++k) {
      if (partition.blocks[seq[k]].is_two_qubit()) {
        host = seq[k];
        break;
      }
    }
    if (host) {
      target[b] = *host;
      prepend[b] = true;
    }
  }

  // Gather gates per surviving block: prepended blocks (in order), own
  // gates, then appended blocks (in order).
  std::vector<std::vector<std::size_t>> before(nb), after(nb);
  for (std::size_t b = 0; b < nb; ++b) {
    if (target[b] == kNone) continue;
    (prepend[b] ? before : after)[target[b]].push_back(b);
  }
  // A wire with several one-qubit blocks and no host keeps only the first;
  // later ones merge into it so each such wire holds one block.
  std::vector<std::size_t> lone(partition.num_qubits, kNone);
  for (std::size_t b = 0; b < nb; ++b) {
    const Block& blk = partition.blocks[b];
    if (blk.is_two_qubit() || target[b] != kNone) continue;
    Qubit q = blk.qubits[0];
    if (lone[q] == kNone) {
      lone[q] = b;
    } else {
      target[b] = lone[q];
      after[lone[q]].push_back(b);
    }
  }

  BlockPartition out;
  out.num_qubits = partition.num_qubits;
  out.measured_qubits = partition.measured_qubits;
  std::vector<std::pair<std::size_t, std::size_t>> where;  // old (block, pos)
  std::vector<std::vector<std::pair<std::size_t, std::size_t>>> origin;
  for (std::size_t b = 0; b < nb; ++b) {
    if (target[b] != kNone) continue;
    Block nbk;
    nbk.qubits = partition.blocks[b].qubits;
    nbk.order_index = out.blocks.size();
    std::vector<std::pair<std::size_t, std::size_t>> src;
    auto take = [&](std::size_t from) {
      const auto& gates = partition.blocks[from].gates;
      for (std::size_t k = 0; k < gates.size(); ++k) {
        nbk.gates.push_back(gates[k]);
        src.emplace_back(from, k);
      }
    };
    for (std::size_t from : before[b]) take(from);
    take(b);
    for (std::size_t from : after[b]) take(from);
    out.blocks.push_back(std::move(nbk));
    origin.push_back(std::move(src));
  }
  renumber_blocks(out);

  out.provenance = partition.provenance;
  std::vector<std::vector<GateLocation>> remap(nb);
  for (std::size_t b = 0; b < nb; ++b) remap[b].resize(partition.blocks[b].gates.size());
  for (std::size_t nbi = 0; nbi < origin.size(); ++nbi) {
    for (std::size_t k = 0; k < origin[nbi].size(); ++k) {
      auto [ob, op] = origin[nbi][k];
      remap[ob][op] = {nbi, k};
    }
  }
  for (auto& loc : out.provenance) loc = remap[loc.block][loc.position];
  return out;
}

UnitaryMatrix block_unitary(const Block& block) {
  return local_unitary(block.gates, block.qubits);
}

Circuit reassemble(const BlockPartition& partition,
                   const std::map<std::size_t, std::vector<Gate>>& replacements) {
  Circuit out(partition.num_qubits);
  for (std::size_t b = 0; b < partition.blocks.size(); ++b) {
    const Block& blk = partition.blocks[b];
    auto it = replacements.find(b);
    const std::vector<Gate>& gates = it == replacements.end() ? blk.gates : it->second;
    for (const Gate& g : gates) {
      for (unsigned k = 0; k < g.arity(); ++k) {
        if (!block_has(blk, g.qubits[k])) {
          throw std::invalid_argument("replacement for block " + std::to_string(b) +
                                      " touches foreign qubit " +
                                      std::to_string(g.qubits[k]));
        }
      }
      out.append(g);
    }
  }
  out.set_measured(partition.measured_qubits);
  return out;
}

}  // namespace qcloak
