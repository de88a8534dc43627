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

#include "qcloak/pipeline.hpp"

#include <chrono>
#include <map>

#include "qcloak/errors.hpp"
#include "qcloak/linalg.hpp"
#include "qcloak/rng.hpp"

namespace qcloak {

namespace {
enum Stream : std::uint64_t { kXStream = 1, kRxStream = 2, kSynthStream = 3 };
}

SynthConfig PipelineConfig::synth() const {
  SynthConfig s;
  s.k = k;
  s.shortlist = shortlist;
  s.seed = derive_seed(seed, {kSynthStream});
  s.grid = grid;
  return s;
}

SynthConfig PipelineConfig::baseline_synth() const {
  SynthConfig s = synth();
  s.shortlist = 1;
  return s;
}

Circuit synthesize_partition(const BlockPartition& work, const BlockPartition& reference,
                             const SynthConfig& cfg) {
  std::map<std::size_t, std::vector<Gate>> chosen;
  for (std::size_t b = 0; b < work.blocks.size(); ++b) {
    auto cands = generate_candidates(work.blocks[b], cfg);
    const Block& ref = b < reference.blocks.size() ? reference.blocks[b] : work.blocks[b];
    chosen[b] = std::move(cands[select_candidate(cands, ref, cfg)]);
  }
  return reassemble(work, chosen);
}

EncodeResult encode(const Circuit& circuit, const PipelineConfig& cfg) {
  auto start = std::chrono::steady_clock::now();
  XInjection xi = inject_x_end(circuit, derive_seed(cfg.seed, {kXStream}));
  BlockPartition blocks = coalesce_single_qubit_blocks(form_blocks(xi.circuit));
  RxInjection rx = inject_rx_pairs(xi.circuit, blocks, derive_seed(cfg.seed, {kRxStream}),
                                   cfg.rx_density);
  EncodeResult out;
  out.circuit = synthesize_partition(rx.partition, blocks, cfg.synth());
  out.key = xi.key;
  out.key.seed = cfg.seed;
  out.key.rx_pairs = rx.record;
  out.num_blocks = blocks.blocks.size();
  if (circuit.num_qubits() <= cfg.verify_max_qubits &&
      circuit.num_qubits() <= kMaxUnitaryQubits) {
    double d = phase_distance(circuit_unitary(out.circuit), circuit_unitary(xi.circuit));
    if (d > kEquivTol) {
      throw SynthesisError("encoded circuit differs from source by " + std::to_string(d));
    }
  }
  out.seconds = std::chrono::duration<double>(std::chrono::steady_clock::now() - start).count();
  return out;
}

Circuit encode_x_only(const Circuit& circuit, const PipelineConfig& cfg) {
  XInjection xi = inject_x_end(circuit, derive_seed(cfg.seed, {kXStream}));
  BlockPartition blocks = coalesce_single_qubit_blocks(form_blocks(xi.circuit));
  return synthesize_partition(blocks, blocks, cfg.baseline_synth());
}

}  // namespace qcloak
