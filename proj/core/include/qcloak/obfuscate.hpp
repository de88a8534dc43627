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
#include <string>
#include <string_view>
#include <vector>

#include "qcloak/circuit.hpp"
#include "qcloak/distribution.hpp"
#include "qcloak/partition.hpp"

namespace qcloak {

/// One injected RX(theta)/RX(-theta) pair, straddling the `boundary`-th
/// block boundary on `wire` (boundary j sits between the j-th and
/// (j+1)-th block touching that wire).
struct RxPair {
  Qubit wire = 0;
  std::size_t boundary = 0;
  double theta = 0.0;

  bool operator==(const RxPair&) const = default;
};

/// The decode secret. flip_mask[q] is true iff a terminal X sits on qubit q.
struct ObfuscationKey {
  std::size_t num_qubits = 0;
  std::vector<bool> flip_mask;
  std::uint64_t seed = 0;
  std::vector<RxPair> rx_pairs;
  /// Measured qubits of the encoded circuit; empty means all.
  std::vector<Qubit> measured_qubits;

  /// Mask as a bitstring, qubit 0 rightmost.
  std::string mask_string() const;
  bool is_zero() const;

  bool operator==(const ObfuscationKey&) const = default;
};

struct XInjection {
  Circuit circuit;
  ObfuscationKey key;
};

/// Appends X to each qubit independently with probability 1/2.
XInjection inject_x_end(const Circuit& circuit, std::uint64_t seed);

struct RxInjection {
  Circuit circuit;
  /// `partition` with the pairs placed inside the blocks; re-partitioning
  /// `circuit` would not reproduce it.
  BlockPartition partition;
  std::vector<RxPair> record;
};

/// For each wire boundary between consecutive blocks, with probability
/// `density`, appends RX(theta) to the earlier block and prepends
/// RX(-theta) to the later one, theta ~ U[0.1, 2*pi - 0.1].
RxInjection inject_rx_pairs(const Circuit& circuit, const BlockPartition& partition,
                            std::uint64_t seed, double density);

/// XORs every outcome with the mask projected onto the measured qubits.
/// Throws FormatError on bit-length mismatch.
Distribution decode(const Distribution& dist, const ObfuscationKey& key);

std::string key_to_json(const ObfuscationKey& key);
/// Throws FormatError on malformed input.
ObfuscationKey key_from_json(std::string_view text);

}  // namespace qcloak
