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
#include <cstdint>
#include <optional>
#include <string>
#include <vector>

#include "qcloak/circuit.hpp"
#include "qcloak/distribution.hpp"
#include "qcloak/pipeline.hpp"
#include "qcloak/synthesis.hpp"

namespace qcloak {

/// Half the L1 distance over the union of supports; counts are normalised.
/// Throws FormatError on bit-length mismatch.
double tvd(const Distribution& p1, const Distribution& p2);

/// The highest-probability outcome, or nullopt if another outcome is
/// within `tie_tol` of it (or the distribution is empty).
std::optional<std::string> unique_argmax(const Distribution& dist, double tie_tol = 1e-9);

/// Percent of the candidate's support lying strictly below the candidate
/// probability of the reference's dominant state. 0 if that state is
/// absent, 100 for a single-outcome support. Throws std::invalid_argument
/// if the reference has no unique dominant state.
double dominant_percentile(const Distribution& reference, const Distribution& candidate);

/// Block resynthesis with no injections; fewest SX+X per block wins.
Circuit make_baseline(const Circuit& circuit, const SynthConfig& cfg);

struct ComparisonReport {
  std::string name;
  std::size_t num_qubits = 0;
  std::size_t num_blocks = 0;
  std::size_t rx_pairs = 0;
  std::string flip_mask;
  bool simulated = false;

  GateCounts original_counts;
  GateCounts baseline_counts;
  GateCounts encoded_counts;
  GateCounts x_only_counts;
  std::size_t baseline_depth = 0;
  std::size_t encoded_depth = 0;

  long long cx_delta = 0;
  double sx_x_delta_pct = 0.0;
  double rz_delta_pct = 0.0;
  long long depth_delta = 0;

  double netlsd = 0.0;
  double netlsd_x_only = 0.0;

  // Shot-level values (sampled); exact ones use ideal distributions.
  double tvd_uncorrected = 0.0;
  double tvd_corrected = 0.0;
  double tvd_uncorrected_exact = 0.0;
  double tvd_corrected_exact = 0.0;
  std::optional<std::string> dominant_state;
  std::optional<double> dominant_percentile_uncorrected;
  std::optional<double> dominant_percentile_corrected;
  std::optional<std::string> uncorrected_top;

  double encode_seconds = 0.0;
  double baseline_seconds = 0.0;
};

/// Builds the baseline, the encoded circuit and the X-only variant and
/// fills every report field. Simulation metrics are skipped when
/// `structural_only` is set or the register exceeds cfg.sim_cap.
ComparisonReport compare(const Circuit& original, const PipelineConfig& cfg,
                         const std::string& name = "", bool structural_only = false);

std::string report_to_json(const ComparisonReport& report);
std::string reports_to_json(const std::vector<ComparisonReport>& reports);
std::string report_csv_header();
std::string report_to_csv_row(const ComparisonReport& report);

}  // namespace qcloak
