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


#include <cmath>
#include <random>

#include <gtest/gtest.h>

#include "qcloak/errors.hpp"
#include "qcloak/obfuscate.hpp"
#include "qcloak/simulator.hpp"
#include "test_util.hpp"

namespace qcloak {
namespace {

using testing::oracle_unitary;
using testing::random_circuit;

constexpr double kPi = std::numbers::pi;

void ry(Circuit& c, Qubit q, double t) { c.rz(q, -kPi / 2).rx(q, t).rz(q, kPi / 2); }

// Prepares p(00)=0.6, p(01)=0.1, p(10)=0.1, p(11)=0.2 (qubit 0 rightmost).
Circuit two_qubit_example() {
  Circuit c(2);
  ry(c, 1, 2 * std::asin(std::sqrt(0.3)));
  double on0 = 2 * std::asin(std::sqrt(0.1 / 0.7));
  double on1 = 2 * std::asin(std::sqrt(0.2 / 0.3));
  ry(c, 0, (on0 + on1) / 2);
  c.cx(1, 0);
  ry(c, 0, (on0 - on1) / 2);
  c.cx(1, 0);
  c.measure_all();
  return c;
}

ObfuscationKey key_with_mask(const std::string& mask) {
  ObfuscationKey k;
  k.num_qubits = mask.size();
  k.flip_mask.resize(mask.size());
  for (std::size_t q = 0; q < mask.size(); ++q) k.flip_mask[q] = mask[mask.size() - 1 - q] == '1';
  return k;
}

TEST(InjectX, FlipMaskExample) {
  Circuit c = two_qubit_example();
  Distribution ideal = ideal_distribution(c);
  ASSERT_NEAR(ideal.at("00"), 0.6, 1e-12);
  ASSERT_NEAR(ideal.at("01"), 0.1, 1e-12);
  ASSERT_NEAR(ideal.at("10"), 0.1, 1e-12);
  ASSERT_NEAR(ideal.at("11"), 0.2, 1e-12);
  std::uint64_t seed = 0;
  while (inject_x_end(c, seed).key.mask_string() != "01") ++seed;
  XInjection inj = inject_x_end(c, seed);
  Distribution enc = ideal_distribution(inj.circuit);
  EXPECT_NEAR(enc.at("00"), 0.1, 1e-12);
  EXPECT_NEAR(enc.at("01"), 0.6, 1e-12);
  EXPECT_NEAR(enc.at("10"), 0.2, 1e-12);
  EXPECT_NEAR(enc.at("11"), 0.1, 1e-12);
  Distribution back = decode(enc, inj.key);
  for (const auto& [s, v] : ideal.outcomes) EXPECT_NEAR(back.at(s), v, 1e-12);
}

TEST(InjectX, ZeroMaskLeavesCircuit) {
  Circuit c = two_qubit_example();
  std::uint64_t seed = 0;
  while (!inject_x_end(c, seed).key.is_zero()) ++seed;
  XInjection inj = inject_x_end(c, seed);
  EXPECT_EQ(inj.circuit, c);
  Distribution d = ideal_distribution(c);
  EXPECT_EQ(decode(d, inj.key), d);
}

TEST(InjectX, AppendsOneXPerFlippedQubit) {
  std::mt19937_64 rng(51);
  Circuit c = random_circuit(32, 50, rng);
  XInjection inj = inject_x_end(c, 77);
  std::size_t flips = 0;
  for (bool b : inj.key.flip_mask) flips += b;
  ASSERT_EQ(inj.circuit.size(), c.size() + flips);
  for (std::size_t i = c.size(); i < inj.circuit.size(); ++i) {
    EXPECT_EQ(inj.circuit.gates()[i].kind, GateKind::X);
    EXPECT_TRUE(inj.key.flip_mask[inj.circuit.gates()[i].qubit()]);
  }
  EXPECT_EQ(inj.key.mask_string().size(), 32u);
  EXPECT_EQ(inject_x_end(c, 77).key, inj.key);
}

TEST(InjectX, MaskBitsAreRoughlyFair) {
  Circuit c(64);
  std::size_t ones = 0;
  for (std::uint64_t s = 0; s < 200; ++s) {
    for (bool b : inject_x_end(c, s).key.flip_mask) ones += b;
  }
  // 12800 fair coins: mean 6400, sd about 57.
  EXPECT_NEAR(static_cast<double>(ones), 6400.0, 400.0);
}

TEST(Decode, KeyExample) {
  ObfuscationKey key = key_with_mask("1101");
  Distribution d{DistributionKind::Probability, 4, {{"0111", 0.75}, {"1000", 0.25}}};
  Distribution out = decode(d, key);
  EXPECT_EQ(out.at("1010"), 0.75);
  EXPECT_EQ(out.at("0101"), 0.25);
  EXPECT_EQ(out.outcomes.size(), 2u);
}

TEST(Decode, InvolutionAndKind) {
  std::mt19937_64 rng(52);
  for (int trial = 0; trial < 50; ++trial) {
    std::string mask;
    for (int i = 0; i < 5; ++i) mask += rng() % 2 ? '1' : '0';
    ObfuscationKey key = key_with_mask(mask);
    Distribution d{DistributionKind::Counts, 5, {}};
    for (int i = 0; i < 8; ++i) d.outcomes[to_bitstring(rng() % 32, 5)] = 1 + rng() % 100;
    Distribution once = decode(d, key);
    EXPECT_EQ(once.kind, DistributionKind::Counts);
    EXPECT_EQ(once.total(), d.total());
    EXPECT_EQ(decode(once, key), d);
  }
}

TEST(Decode, LengthMismatch) {
  ObfuscationKey key = key_with_mask("101");
  Distribution d{DistributionKind::Probability, 2, {{"01", 1.0}}};
  EXPECT_THROW(decode(d, key), FormatError);
}

TEST(Decode, ProjectsOntoMeasuredQubits) {
  ObfuscationKey key = key_with_mask("100");  // flip on qubit 2
  key.measured_qubits = {2, 0};               // classical bit 0 <- q2, bit 1 <- q0
  Distribution d{DistributionKind::Probability, 2, {{"00", 1.0}}};
  EXPECT_EQ(decode(d, key).at("01"), 1.0);
}

// q0-q1, q1-q2, q0-q1: three blocks, three internal wire boundaries.
Circuit three_block_circuit() {
  Circuit c(3);
  c.cx(0, 1).rz(1, 0.4).cx(1, 2).sx(2).cx(0, 1).rz(0, 1.3);
  return c;
}

TEST(InjectRx, DensityOneOnThreeBlockCircuit) {
  Circuit c = three_block_circuit();
  BlockPartition p = form_blocks(c);
  ASSERT_EQ(p.blocks.size(), 3u);
  RxInjection inj = inject_rx_pairs(c, p, 5, 1.0);
  EXPECT_EQ(inj.record.size(), 3u);
  EXPECT_EQ(gate_counts(inj.circuit).rx, 6u);
  for (const RxPair& r : inj.record) {
    EXPECT_GE(r.theta, 0.1);
    EXPECT_LE(r.theta, 2 * kPi - 0.1);
  }
  EXPECT_TRUE(equal_up_to_global_phase(oracle_unitary(3, inj.circuit.gates()),
                                       oracle_unitary(3, c.gates()), 1e-9));
  EXPECT_EQ(reassemble(inj.partition), inj.circuit);
}

TEST(InjectRx, DensityZeroIsIdentity) {
  Circuit c = three_block_circuit();
  RxInjection inj = inject_rx_pairs(c, form_blocks(c), 5, 0.0);
  EXPECT_EQ(inj.circuit, c);
  EXPECT_TRUE(inj.record.empty());
  EXPECT_THROW(inject_rx_pairs(c, form_blocks(c), 5, 1.5), std::invalid_argument);
}

TEST(InjectRx, PairsCancelAndRemovalRestores) {
  std::mt19937_64 rng(53);
  for (int trial = 0; trial < 30; ++trial) {
    std::size_t n = 2 + rng() % 4;
    Circuit c = random_circuit(n, 30, rng, false);
    BlockPartition p = form_blocks(c);
    RxInjection inj = inject_rx_pairs(c, p, trial, 0.7);
    EXPECT_TRUE(equal_up_to_global_phase(oracle_unitary(n, inj.circuit.gates()),
                                         oracle_unitary(n, c.gates()), 1e-9));
    // Stripping every RX restores the original gate sequence.
    std::vector<Gate> stripped;
    for (const Gate& g : inj.circuit.gates()) {
      if (g.kind != GateKind::RX) stripped.push_back(g);
    }
    EXPECT_EQ(testing::wire_sequences(n, stripped), testing::wire_sequences(n, c.gates()));
    // Provenance still points at the original gates.
    for (std::size_t i = 0; i < c.size(); ++i) {
      const GateLocation& loc = inj.partition.provenance[i];
      EXPECT_EQ(inj.partition.blocks[loc.block].gates[loc.position], c.gates()[i]);
    }
  }
}

TEST(InjectRx, AdjacentPairIsIdentity) {
  Circuit pair(1);
  pair.rx(0, 1.7).rx(0, -1.7);
  EXPECT_LT(testing::max_abs(oracle_unitary(1, pair.gates()) - Eigen::Matrix2cd::Identity()),
            1e-15);
}

TEST(KeyJson, RoundTrip) {
  Circuit c = three_block_circuit();
  c.set_measured({2, 0});
  XInjection inj = inject_x_end(c, 9);
  inj.key.rx_pairs = inject_rx_pairs(inj.circuit, form_blocks(inj.circuit), 9, 1.0).record;
  std::string text = key_to_json(inj.key);
  EXPECT_EQ(key_from_json(text), inj.key);
  EXPECT_NE(text.find("\"version\": 1"), std::string::npos);
}

TEST(KeyJson, Errors) {
  EXPECT_THROW(key_from_json("not json"), FormatError);
  EXPECT_THROW(key_from_json(R"({"version":2,"num_qubits":1,"flip_mask":"1","seed":0,"rx_pairs":[]})"),
               FormatError);
  EXPECT_THROW(key_from_json(R"({"version":1,"num_qubits":2,"flip_mask":"1","seed":0,"rx_pairs":[]})"),
               FormatError);
  EXPECT_THROW(key_from_json(R"({"version":1,"num_qubits":1,"flip_mask":"2","seed":0,"rx_pairs":[]})"),
               FormatError);
  EXPECT_THROW(key_from_json(R"({"version":1,"num_qubits":1,"flip_mask":"1"})"), FormatError);
}

}  // namespace
}  // namespace qcloak
