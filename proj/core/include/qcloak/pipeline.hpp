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
#include <vector>

#include "qcloak/circuit.hpp"
#include "qcloak/netlsd.hpp"
#include "qcloak/obfuscate.hpp"
#include "qcloak/partition.hpp"
#include "qcloak/simulator.hpp"
#include "qcloak/synthesis.hpp"

namespace qcloak {

struct PipelineConfig {
  std::uint64_t seed = 1;
  std::size_t k = 3;
  std::size_t shortlist = 2;
  double rx_density = 1.0;
  std::size_t shots = kDefaultShots;
  std::size_t sim_cap = 20;
  NetlsdGrid grid;
  /// Largest register for the full-circuit equivalence check.
  std::size_t verify_max_qubits = 10;

  /// Synthesis settings for the obfuscating pipeline.
  SynthConfig synth() const;
  /// Synthesis settings for the baseline: fewest SX+X wins outright.
  SynthConfig baseline_synth() const;
};

/// Generates candidates for every block of `work` and keeps the selected
/// one. Selection compares against the same-index block of `reference`.
/// Returns the reassembled circuit.
Circuit synthesize_partition(const BlockPartition& work, const BlockPartition& reference,
                             const SynthConfig& cfg);

struct EncodeResult {
  Circuit circuit;
  ObfuscationKey key;
  std::size_t num_blocks = 0;
  double seconds = 0.0;
};

/// X injection, partitioning, RX-pair injection, per-block synthesis and
/// reassembly. For registers up to cfg.verify_max_qubits the result is
/// checked against the X-injected input; a mismatch throws SynthesisError.
EncodeResult encode(const Circuit& circuit, const PipelineConfig& cfg);

/// X injection followed by baseline synthesis: the structural reference for
/// what the terminal X gates alone change.
Circuit encode_x_only(const Circuit& circuit, const PipelineConfig& cfg);

}  // namespace qcloak
