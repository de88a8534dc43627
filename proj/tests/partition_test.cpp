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


#include <random>

#include <gtest/gtest.h>

#include "qcloak/partition.hpp"
#include "qcloak/synthesis.hpp"
#include "test_util.hpp"

namespace qcloak {
namespace {

using testing::max_abs;
using testing::oracle_unitary;
using testing::random_circuit;

// Replays blocks in order and checks the per-wire gate sequence.
void expect_wire_order(const Circuit& c, const BlockPartition& p) {
  std::vector<std::vector<Gate>> want(c.num_qubits()), got(c.num_qubits());
  for (const Gate& g : c.gates()) {
    for (unsigned k = 0; k < g.arity(); ++k) want[g.qubits[k]].push_back(g);
  }
  for (const Block& b : p.blocks) {
    for (const Gate& g : b.gates) {
      for (unsigned k = 0; k < g.arity(); ++k) got[g.qubits[k]].push_back(g);
    }
  }
  EXPECT_EQ(got, want);
}

void expect_well_formed(const Circuit& c, const BlockPartition& p) {
  std::size_t total = 0;
  for (std::size_t b = 0; b < p.blocks.size(); ++b) {
    const Block& blk = p.blocks[b];
    EXPECT_EQ(blk.order_index, b);
    EXPECT_TRUE(blk.qubits.size() == 1 || blk.qubits.size() == 2);
    EXPECT_TRUE(std::is_sorted(blk.qubits.begin(), blk.qubits.end()));
    for (const Gate& g : blk.gates) {
      for (unsigned k = 0; k < g.arity(); ++k) {
        EXPECT_NE(std::find(blk.qubits.begin(), blk.qubits.end(), g.qubits[k]),
                  blk.qubits.end());
      }
    }
    total += blk.gates.size();
  }
  EXPECT_EQ(total, c.size());
  ASSERT_EQ(p.provenance.size(), c.size());
  for (std::size_t i = 0; i < c.size(); ++i) {
    const GateLocation& loc = p.provenance[i];
    ASSERT_LT(loc.block, p.blocks.size());
    ASSERT_LT(loc.position, p.blocks[loc.block].gates.size());
    EXPECT_EQ(p.blocks[loc.block].gates[loc.position], c.gates()[i]);
  }
  expect_wire_order(c, p);
  Circuit back = reassemble(p);
  EXPECT_EQ(testing::wire_sequences(c.num_qubits(), back.gates()),
            testing::wire_sequences(c.num_qubits(), c.gates()));
  EXPECT_EQ(back.measured_qubits(), c.measured_qubits());
}

TEST(FormBlocks, SingleCx) {
  Circuit c(2);
  c.cx(0, 1);
  BlockPartition p = form_blocks(c);
  ASSERT_EQ(p.blocks.size(), 1u);
  EXPECT_EQ(p.blocks[0].qubits, (std::vector<Qubit>{0, 1}));
  EXPECT_EQ(p.blocks[0].gates.size(), 1u);
}

TEST(FormBlocks, DisjointPairs) {
  Circuit c(4);
  c.cx(0, 1).cx(2, 3);
  BlockPartition p = form_blocks(c);
  ASSERT_EQ(p.blocks.size(), 2u);
  EXPECT_EQ(p.blocks[0].qubits, (std::vector<Qubit>{0, 1}));
  EXPECT_EQ(p.blocks[1].qubits, (std::vector<Qubit>{2, 3}));
}

TEST(FormBlocks, SharedQubitCompletesBlock) {
  Circuit c(3);
  c.cx(0, 1).x(1).cx(1, 2);
  BlockPartition p = form_blocks(c);
  ASSERT_EQ(p.blocks.size(), 2u);
  EXPECT_EQ(p.blocks[0].qubits, (std::vector<Qubit>{0, 1}));
  EXPECT_EQ(p.blocks[0].gates, (std::vector<Gate>{Gate::cx(0, 1), Gate::x(1)}));
  EXPECT_EQ(p.blocks[1].qubits, (std::vector<Qubit>{1, 2}));
  EXPECT_EQ(p.blocks[1].gates, (std::vector<Gate>{Gate::cx(1, 2)}));
  // q0 is freed when block 0 completes, so a later gate on it opens a block.
  c.x(0);
  p = form_blocks(c);
  ASSERT_EQ(p.blocks.size(), 3u);
  EXPECT_EQ(p.blocks[2].qubits, (std::vector<Qubit>{0}));
}

TEST(FormBlocks, OneQubitGatesJoinOpenBlocks) {
  Circuit c(2);
  c.x(0).sx(1).cx(1, 0).rz(0, 0.5).cx(0, 1);
  BlockPartition p = form_blocks(c);
  // X(0) and SX(1) open separate blocks; CX(1,0) completes both.
  ASSERT_EQ(p.blocks.size(), 3u);
  EXPECT_EQ(p.blocks[2].gates.size(), 3u);
  expect_well_formed(c, p);
}

TEST(FormBlocks, RandomCircuitsAreWellFormed) {
  std::mt19937_64 rng(41);
  for (int trial = 0; trial < 200; ++trial) {
    Circuit c = random_circuit(1 + rng() % 7, rng() % 60, rng);
    BlockPartition p = form_blocks(c);
    expect_well_formed(c, p);
    EXPECT_EQ(form_blocks(c).blocks.size(), p.blocks.size());
    expect_well_formed(c, coalesce_single_qubit_blocks(p));
  }
}

TEST(Coalesce, FoldsIntoNeighbours) {
  Circuit c(3);
  c.x(0).cx(0, 1).x(0).cx(1, 2).sx(2).x(1);
  BlockPartition p = coalesce_single_qubit_blocks(form_blocks(c));
  for (const Block& b : p.blocks) EXPECT_TRUE(b.is_two_qubit());
  ASSERT_EQ(p.blocks.size(), 2u);
  expect_well_formed(c, p);
}

TEST(Coalesce, LoneWireKeepsOneBlock) {
  Circuit c(3);
  c.x(2).cx(0, 1).sx(2).cx(0, 1).rz(2, 0.1);
  BlockPartition p = coalesce_single_qubit_blocks(form_blocks(c));
  std::size_t lone = 0;
  for (const Block& b : p.blocks) lone += b.is_two_qubit() ? 0 : 1;
  EXPECT_EQ(lone, 1u);
  expect_well_formed(c, p);
}

TEST(BlockUnitary, Examples) {
  Block cx{{0, 1}, {Gate::cx(0, 1)}, 0};
  EXPECT_LT(max_abs(block_unitary(cx) - oracle_unitary(2, {Gate::cx(0, 1)})), 1e-15);
  Block xx{{0}, {Gate::x(0), Gate::x(0)}, 0};
  EXPECT_LT(max_abs(block_unitary(xx) - UnitaryMatrix::Identity(2, 2)), 1e-15);
}

TEST(BlockUnitary, RandomSixGateBlocks) {
  std::mt19937_64 rng(42);
  for (int trial = 0; trial < 50; ++trial) {
    Circuit local = random_circuit(2, 6, rng);
    // Same block placed on global wires 4 and 9.
    std::vector<Gate> gates;
    for (Gate g : local.gates()) {
      for (auto& q : g.qubits) q = q == 0 ? 4 : 9;
      gates.push_back(g);
    }
    Block b{{4, 9}, gates, 0};
    EXPECT_LT(max_abs(block_unitary(b) - oracle_unitary(2, local.gates())), 1e-12);
  }
}

TEST(Reassemble, EquivalentReplacementsPreserveUnitary) {
  std::mt19937_64 rng(43);
  for (int trial = 0; trial < 40; ++trial) {
    std::size_t n = 2 + rng() % 5;
    Circuit c = random_circuit(n, 40, rng);
    BlockPartition p = form_blocks(c);
    std::map<std::size_t, std::vector<Gate>> repl;
    std::size_t total = 0;
    SynthConfig cfg;
    cfg.k = 1;
    for (const Block& b : p.blocks) {
      repl[b.order_index] = generate_candidates(b, cfg)[0];
      total += repl[b.order_index].size();
    }
    Circuit out = reassemble(p, repl);
    EXPECT_EQ(out.size(), total);
    EXPECT_TRUE(equal_up_to_global_phase(oracle_unitary(n, out.gates()),
                                         oracle_unitary(n, c.gates()), 1e-9));
  }
}

TEST(Reassemble, IdentityIsGateForGateInBlockOrder) {
  Circuit c(3);
  c.cx(0, 1).x(1).cx(1, 2).sx(2).measure_all();
  EXPECT_EQ(reassemble(form_blocks(c)), c);
}

TEST(Reassemble, RejectsForeignWire) {
  Circuit c(3);
  c.cx(0, 1);
  BlockPartition p = form_blocks(c);
  EXPECT_THROW(reassemble(p, {{0, {Gate::x(2)}}}), std::invalid_argument);
}

}  // namespace
}  // namespace qcloak
