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


#include <algorithm>
#include <random>

#include <gtest/gtest.h>

#include "qcloak/analysis.hpp"
#include "qcloak/errors.hpp"
#include "qcloak/simulator.hpp"
#include "test_util.hpp"

namespace qcloak {
namespace {

using testing::oracle_unitary;
using testing::random_circuit;

Distribution probs(std::size_t bits, std::map<std::string, double> m) {
  return {DistributionKind::Probability, bits, std::move(m)};
}

TEST(Tvd, Examples) {
  Distribution a = probs(2, {{"00", 0.6}, {"01", 0.1}, {"10", 0.1}, {"11", 0.2}});
  Distribution b = probs(2, {{"00", 0.1}, {"01", 0.6}, {"10", 0.2}, {"11", 0.1}});
  EXPECT_NEAR(tvd(a, b), 0.6, 1e-15);
  EXPECT_EQ(tvd(a, a), 0.0);
  EXPECT_EQ(tvd(probs(1, {{"0", 1.0}}), probs(1, {{"1", 1.0}})), 1.0);
  EXPECT_THROW(tvd(a, probs(1, {{"0", 1.0}})), FormatError);
}

TEST(Tvd, NormalisesCounts) {
  Distribution c{DistributionKind::Counts, 1, {{"0", 30}, {"1", 70}}};
  EXPECT_NEAR(tvd(c, probs(1, {{"0", 0.3}, {"1", 0.7}})), 0.0, 1e-15);
}

TEST(Tvd, MetricProperties) {
  std::mt19937_64 rng(81);
  std::uniform_real_distribution<double> u(0, 1);
  auto random_dist = [&] {
    Distribution d{DistributionKind::Counts, 3, {}};
    for (int k = 0; k < 8; ++k) {
      if (u(rng) < 0.7) d.outcomes[to_bitstring(k, 3)] = u(rng);
    }
    if (d.outcomes.empty()) d.outcomes["000"] = 1.0;
    return d.normalized();
  };
  for (int trial = 0; trial < 200; ++trial) {
    Distribution p = random_dist(), q = random_dist(), r = random_dist();
    EXPECT_NEAR(tvd(p, q), tvd(q, p), 1e-15);
    EXPECT_GE(tvd(p, q), 0.0);
    EXPECT_LE(tvd(p, q), 1.0);
    EXPECT_LE(tvd(p, r), tvd(p, q) + tvd(q, r) + 1e-12);
  }
}

TEST(UniqueArgmax, Ties) {
  EXPECT_EQ(unique_argmax(probs(2, {{"00", 0.7}, {"11", 0.3}})), "00");
  EXPECT_FALSE(unique_argmax(probs(2, {{"00", 0.5}, {"11", 0.5}})));
  EXPECT_FALSE(unique_argmax(probs(2, {})));
}

TEST(Percentile, Examples) {
  Distribution ref = probs(2, {{"00", 0.4}, {"01", 0.3}, {"10", 0.2}, {"11", 0.1}});
  EXPECT_EQ(dominant_percentile(ref, ref), 100.0);
  Distribution low = probs(2, {{"00", 0.1}, {"01", 0.3}, {"10", 0.2}, {"11", 0.4}});
  EXPECT_EQ(dominant_percentile(ref, low), 0.0);
  Distribution second = probs(2, {{"00", 0.3}, {"01", 0.4}, {"10", 0.2}, {"11", 0.1}});
  EXPECT_NEAR(dominant_percentile(ref, second), 200.0 / 3, 1e-12);
  EXPECT_EQ(dominant_percentile(ref, probs(2, {{"01", 1.0}})), 0.0);
  EXPECT_EQ(dominant_percentile(ref, probs(2, {{"00", 1.0}})), 100.0);
  // A tie at the top counts as not below, so the result drops under 100.
  Distribution tied = probs(2, {{"00", 0.4}, {"01", 0.4}, {"10", 0.2}});
  EXPECT_EQ(dominant_percentile(ref, tied), 50.0);
  EXPECT_THROW(dominant_percentile(probs(1, {{"0", 0.5}, {"1", 0.5}}), ref),
               std::invalid_argument);
}

TEST(Baseline, CxPairCollapses) {
  Circuit c(2);
  c.cx(0, 1).cx(0, 1);
  EXPECT_EQ(gate_counts(make_baseline(c, SynthConfig{})).cx, 0u);
}

TEST(Baseline, MinimalCircuitKeepsCx) {
  Circuit c(3);
  c.cx(0, 1).cx(1, 2);
  EXPECT_EQ(gate_counts(make_baseline(c, SynthConfig{})).cx, 2u);
}

TEST(Baseline, PreservesOutput) {
  std::mt19937_64 rng(82);
  for (int trial = 0; trial < 20; ++trial) {
    std::size_t n = 2 + rng() % 7;
    Circuit c = random_circuit(n, 50, rng);
    c.measure_all();
    Circuit b = make_baseline(c, SynthConfig{});
    EXPECT_LE(gate_counts(b).cx, gate_counts(c).cx);
    EXPECT_EQ(gate_counts(b).rx, 0u);
    EXPECT_LT(tvd(ideal_distribution(b), ideal_distribution(c)), 1e-9);
    if (n <= 6) {
      EXPECT_TRUE(equal_up_to_global_phase(oracle_unitary(n, b.gates()),
                                           oracle_unitary(n, c.gates()), 1e-9));
    }
  }
}

Circuit tiny() {
  Circuit c(3);
  c.sx(0).cx(0, 1).rz(1, 0.3).cx(1, 2).sx(2).cx(0, 1).x(0).measure_all();
  return c;
}

TEST(Compare, TinyCircuit) {
  PipelineConfig cfg;
  cfg.shots = 20000;
  ComparisonReport r = compare(tiny(), cfg, "tiny");
  EXPECT_EQ(r.name, "tiny");
  EXPECT_TRUE(r.simulated);
  EXPECT_EQ(r.cx_delta, 0);
  EXPECT_LE(r.depth_delta, 0);
  EXPECT_LT(r.tvd_corrected_exact, 1e-9);
  EXPECT_LT(r.tvd_corrected, 0.05);
  EXPECT_EQ(r.flip_mask.size(), 3u);
  EXPECT_GT(r.num_blocks, 0u);
  EXPECT_GE(r.netlsd, 0.0);
  std::string json = report_to_json(r);
  EXPECT_NE(json.find("\"tvd_corrected\""), std::string::npos);
  std::string row = report_to_csv_row(r);
  std::string header = report_csv_header();
  EXPECT_EQ(std::count(row.begin(), row.end(), ','), std::count(header.begin(), header.end(), ','));
}

TEST(Compare, StructuralOnlySkipsSimulation) {
  ComparisonReport r = compare(tiny(), PipelineConfig{}, "tiny", true);
  EXPECT_FALSE(r.simulated);
  EXPECT_EQ(report_to_json(r).find("tvd_corrected"), std::string::npos);
  std::string all = reports_to_json({r, r});
  EXPECT_EQ(all.front(), '[');
}

}  // namespace
}  // namespace qcloak
