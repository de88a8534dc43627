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
#include "qcloak/simulator.hpp"
#include "test_util.hpp"

namespace qcloak {
namespace {

using testing::oracle_unitary;
using testing::random_circuit;

// Half the L1 distance, written out here to stay independent of analysis.
double l1_half(const Distribution& a, const Distribution& b) {
  Distribution p = a.normalized(), q = b.normalized();
  double s = 0;
  for (const auto& [k, v] : p.outcomes) s += std::abs(v - q.at(k));
  for (const auto& [k, v] : q.outcomes) {
    if (!p.outcomes.count(k)) s += v;
  }
  return s / 2;
}

TEST(Statevector, EmptyCircuit) {
  Statevector sv = run_statevector(Circuit(3));
  ASSERT_EQ(sv.amplitudes.size(), 8u);
  EXPECT_EQ(sv.amplitudes[0], Complex(1.0));
  for (std::size_t k = 1; k < 8; ++k) EXPECT_EQ(sv.amplitudes[k], Complex(0.0));
}

TEST(Statevector, LittleEndian) {
  Circuit c(2);
  c.x(0);
  Statevector sv = run_statevector(c);
  EXPECT_EQ(std::abs(sv.amplitudes[1]), 1.0);
  EXPECT_EQ(ideal_distribution(c).outcomes, (std::map<std::string, double>{{"01", 1.0}}));
}

TEST(Statevector, SxIsBalanced) {
  Circuit c(1);
  c.sx(0);
  Distribution d = ideal_distribution(c);
  EXPECT_NEAR(d.at("0"), 0.5, 1e-15);
  EXPECT_NEAR(d.at("1"), 0.5, 1e-15);
}

TEST(Statevector, MatchesUnitaryOracle) {
  std::mt19937_64 rng(71);
  for (int trial = 0; trial < 40; ++trial) {
    std::size_t n = 1 + rng() % 8;
    Circuit c = random_circuit(n, rng() % 60, rng);
    Statevector sv = run_statevector(c);
    Eigen::VectorXcd ref = oracle_unitary(n, c.gates()).col(0);
    double worst = 0;
    for (std::size_t k = 0; k < sv.amplitudes.size(); ++k) {
      worst = std::max(worst, std::abs(sv.amplitudes[k] - ref(static_cast<Eigen::Index>(k))));
    }
    EXPECT_LT(worst, 1e-9);
  }
}

TEST(Statevector, NormPreservedUpToTenQubits) {
  std::mt19937_64 rng(72);
  Circuit c = random_circuit(10, 400, rng);
  Circuit prefix(10);
  for (const Gate& g : c.gates()) {
    prefix.append(g);
    if (prefix.size() % 40 == 0) EXPECT_NEAR(run_statevector(prefix).norm_squared(), 1.0, 1e-9);
  }
}

TEST(Statevector, CapacityGuard) {
  EXPECT_THROW(run_statevector(Circuit(kMaxSimQubits + 1)), CapacityError);
  EXPECT_THROW(run_statevector(Circuit(5), 4), CapacityError);
}

TEST(IdealDistribution, BellPair) {
  Circuit c(2);
  c.sx(0).cx(0, 1).measure_all();
  Distribution d = ideal_distribution(c);
  ASSERT_EQ(d.outcomes.size(), 2u);
  EXPECT_NEAR(d.at("00"), 0.5, 1e-12);
  EXPECT_NEAR(d.at("11"), 0.5, 1e-12);
  EXPECT_EQ(d.kind, DistributionKind::Probability);
}

TEST(IdealDistribution, Marginalisation) {
  std::mt19937_64 rng(73);
  for (int trial = 0; trial < 20; ++trial) {
    Circuit c = random_circuit(4, 30, rng);
    Statevector sv = run_statevector(c);
    std::vector<Qubit> meas{3, 1};
    c.set_measured(meas);
    Distribution d = ideal_distribution(c);
    EXPECT_EQ(d.num_bits, 2u);
    std::map<std::string, double> brute;
    for (std::size_t k = 0; k < 16; ++k) {
      std::string s;
      s += ((k >> 1) & 1U) ? '1' : '0';  // classical bit 1 <- q1
      s += ((k >> 3) & 1U) ? '1' : '0';  // classical bit 0 <- q3
      brute[s] += std::norm(sv.amplitudes[k]);
    }
    for (const auto& [s, p] : brute) EXPECT_NEAR(d.at(s), p, 1e-12);
  }
}

TEST(Sample, DeterministicCircuit) {
  Circuit c(3);
  c.x(1);
  Distribution d = sample(c, 1234, 9);
  EXPECT_EQ(d.kind, DistributionKind::Counts);
  EXPECT_EQ(d.outcomes, (std::map<std::string, double>{{"010", 1234.0}}));
}

TEST(Sample, FairCoinWithinFiveSigma) {
  Circuit c(1);
  c.sx(0);
  Distribution d = sample(c, 100000, 3);
  // sd = sqrt(1e5 / 4) ~ 158.
  EXPECT_NEAR(d.at("0"), 50000.0, 5 * 158.2);
  EXPECT_EQ(d.total(), 100000.0);
}

TEST(Sample, SeedDeterminism) {
  std::mt19937_64 rng(74);
  Circuit c = random_circuit(4, 30, rng);
  EXPECT_EQ(sample(c, 5000, 17), sample(c, 5000, 17));
  EXPECT_NE(sample(c, 5000, 17), sample(c, 5000, 18));
}

TEST(Sample, ConvergesToIdeal) {
  std::mt19937_64 rng(75);
  for (int trial = 0; trial < 3; ++trial) {
    Circuit c = random_circuit(4, 40, rng);
    EXPECT_LT(l1_half(sample(c, 1000000, trial), ideal_distribution(c)), 0.01);
  }
}

TEST(Expectation, Examples) {
  Distribution point{DistributionKind::Probability, 2, {{"10", 1.0}}};
  EXPECT_EQ(expectation(point, {{"10", 3.5}}), 3.5);
  Distribution coin{DistributionKind::Counts, 1, {{"0", 50}, {"1", 50}}};
  EXPECT_EQ(expectation(coin, {{"0", 0.0}, {"1", 1.0}}), 0.5);
  EXPECT_THROW(expectation(coin, {{"0", 0.0}}), std::invalid_argument);
}

TEST(Expectation, MaxCutRing4) {
  // Ring 0-1-2-3-0; bit q is character 3 - q.
  auto cut = [](const std::string& s) {
    double v = 0;
    for (int q = 0; q < 4; ++q) v += s[3 - q] != s[3 - (q + 1) % 4];
    return v;
  };
  Distribution d{DistributionKind::Probability, 4, {{"1010", 1.0}}};
  EXPECT_EQ(expectation(d, cut), 4.0);
}

TEST(DistributionJson, RoundTripAndErrors) {
  Distribution counts{DistributionKind::Counts, 3, {{"000", 10}, {"101", 7}}};
  EXPECT_EQ(distribution_from_json(distribution_to_json(counts)), counts);
  Distribution probs{DistributionKind::Probability, 2, {{"01", 0.1}, {"10", 0.9}}};
  EXPECT_EQ(distribution_from_json(distribution_to_json(probs)), probs);
  EXPECT_NE(distribution_to_json(counts).find("\"000\": 10"), std::string::npos);
  EXPECT_THROW(distribution_from_json("{"), FormatError);
  EXPECT_THROW(distribution_from_json(R"({"kind":"x","num_bits":1,"outcomes":{}})"),
               FormatError);
  EXPECT_THROW(distribution_from_json(R"({"kind":"counts","num_bits":2,"outcomes":{"0":1}})"),
               FormatError);
  EXPECT_THROW(distribution_from_json(R"({"kind":"counts","num_bits":1,"outcomes":{"0":1.5}})"),
               FormatError);
  EXPECT_THROW(
      distribution_from_json(R"({"kind":"probability","num_bits":1,"outcomes":{"0":-1}})"),
      FormatError);
}

}  // namespace
}  // namespace qcloak
