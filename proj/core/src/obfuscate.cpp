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

#include "qcloak/obfuscate.hpp"

#include <algorithm>
#include <cmath>
#include <numbers>
#include <random>
#include <stdexcept>

#include <nlohmann/json.hpp>

#include "qcloak/errors.hpp"
#include "qcloak/rng.hpp"

namespace qcloak {

namespace {
constexpr std::uint64_t kRxStream = 0x5258;
constexpr double kMinTheta = 0.1;
}  // namespace

std::string ObfuscationKey::mask_string() const {
  std::string s(flip_mask.size(), '0');
  for (std::size_t q = 0; q < flip_mask.size(); ++q) {
    if (flip_mask[q]) s[flip_mask.size() - 1 - q] = '1';
  }
  return s;
}

bool ObfuscationKey::is_zero() const {
  return std::none_of(flip_mask.begin(), flip_mask.end(), [](bool b) { return b; });
}

XInjection inject_x_end(const Circuit& circuit, std::uint64_t seed) {
  std::mt19937_64 rng(seed);
  XInjection out{circuit, {}};
  out.key.num_qubits = circuit.num_qubits();
  out.key.seed = seed;
  out.key.measured_qubits = circuit.measured_qubits();
  out.key.flip_mask.resize(circuit.num_qubits());
  for (Qubit q = 0; q < circuit.num_qubits(); ++q) {
    bool flip = (rng() >> 63) != 0;
    out.key.flip_mask[q] = flip;
    if (flip) out.circuit.x(q);
  }
  return out;
}

RxInjection inject_rx_pairs(const Circuit& circuit, const BlockPartition& partition,
                            std::uint64_t seed, double density) {
  if (partition.num_qubits != circuit.num_qubits()) {
    throw std::invalid_argument("partition does not match circuit");
  }
  if (!(density >= 0.0 && density <= 1.0)) {
    throw std::invalid_argument("rx density must lie in [0, 1]");
  }
  std::mt19937_64 rng(derive_seed(seed, {kRxStream}));
  std::uniform_real_distribution<double> coin(0.0, 1.0);
  std::uniform_real_distribution<double> angle(kMinTheta, 2 * std::numbers::pi - kMinTheta);

  RxInjection out{{}, partition, {}};
  std::vector<std::size_t> shift(partition.blocks.size(), 0);
  std::vector<std::vector<std::size_t>> on_wire(partition.num_qubits);
  for (std::size_t b = 0; b < partition.blocks.size(); ++b) {
    for (Qubit q : partition.blocks[b].qubits) on_wire[q].push_back(b);
  }
  for (Qubit w = 0; w < partition.num_qubits; ++w) {
    const auto& seq = on_wire[w];
    for (std::size_t j = 0; j + 1 < seq.size(); ++j) {
      if (coin(rng) >= density) continue;
      double theta = angle(rng);
      out.partition.blocks[seq[j]].gates.push_back(Gate::rx(w, theta));
      auto& later = out.partition.blocks[seq[j + 1]].gates;
      later.insert(later.begin(), Gate::rx(w, -theta));
      ++shift[seq[j + 1]];
      out.record.push_back({w, j, theta});
    }
  }
  for (auto& loc : out.partition.provenance) loc.position += shift[loc.block];
  out.circuit = reassemble(out.partition);
  return out;
}

Distribution decode(const Distribution& dist, const ObfuscationKey& key) {
  if (key.flip_mask.size() != key.num_qubits) {
    throw FormatError("key flip_mask length differs from num_qubits");
  }
  std::vector<Qubit> bits = key.measured_qubits;
  if (bits.empty()) {
    for (Qubit q = 0; q < key.num_qubits; ++q) bits.push_back(q);
  }
  if (dist.num_bits != bits.size()) {
    throw FormatError("distribution has " + std::to_string(dist.num_bits) +
                      " bits but key covers " + std::to_string(bits.size()));
  }
  std::string mask(bits.size(), '0');
  for (std::size_t j = 0; j < bits.size(); ++j) {
    if (bits[j] >= key.num_qubits) throw FormatError("key measured qubit out of range");
    if (key.flip_mask[bits[j]]) mask[bits.size() - 1 - j] = '1';
  }
  Distribution out;
  out.kind = dist.kind;
  out.num_bits = dist.num_bits;
  for (const auto& [s, v] : dist.outcomes) {
    if (s.size() != mask.size()) throw FormatError("outcome length mismatch: '" + s + "'");
    std::string t = s;
    for (std::size_t i = 0; i < t.size(); ++i) {
      if (mask[i] == '1') t[i] = t[i] == '0' ? '1' : '0';
    }
    out.outcomes[t] += v;
  }
  return out;
}

std::string key_to_json(const ObfuscationKey& key) {
  nlohmann::ordered_json j;
  j["version"] = 1;
  j["num_qubits"] = key.num_qubits;
  j["flip_mask"] = key.mask_string();
  j["seed"] = key.seed;
  nlohmann::ordered_json pairs = nlohmann::ordered_json::array();
  for (const RxPair& p : key.rx_pairs) {
    nlohmann::ordered_json e;
    e["wire"] = p.wire;
    e["boundary"] = p.boundary;
    e["theta"] = p.theta;
    pairs.push_back(std::move(e));
  }
  j["rx_pairs"] = std::move(pairs);
  if (!key.measured_qubits.empty()) j["measured_qubits"] = key.measured_qubits;
  return j.dump(2) + "\n";
}

ObfuscationKey key_from_json(std::string_view text) {
  nlohmann::json j;
  try {
    j = nlohmann::json::parse(text);
  } catch (const nlohmann::json::exception& e) {
    throw FormatError(std::string("key: ") + e.what());
  }
  try {
    if (j.at("version").get<int>() != 1) throw FormatError("key: unsupported version");
    ObfuscationKey key;
    key.num_qubits = j.at("num_qubits").get<std::size_t>();
    std::string mask = j.at("flip_mask").get<std::string>();
    if (mask.size() != key.num_qubits || mask.find_first_not_of("01") != std::string::npos) {
      throw FormatError("key: flip_mask must be a " + std::to_string(key.num_qubits) +
                        "-bit string");
    }
    key.flip_mask.resize(key.num_qubits);
    for (std::size_t q = 0; q < key.num_qubits; ++q) {
      key.flip_mask[q] = mask[key.num_qubits - 1 - q] == '1';
    }
    key.seed = j.at("seed").get<std::uint64_t>();
    for (const auto& e : j.at("rx_pairs")) {
      key.rx_pairs.push_back({e.at("wire").get<Qubit>(), e.at("boundary").get<std::size_t>(),
                              e.at("theta").get<double>()});
    }
    if (j.contains("measured_qubits")) {
      key.measured_qubits = j.at("measured_qubits").get<std::vector<Qubit>>();
    }
    return key;
  } catch (const nlohmann::json::exception& e) {
    throw FormatError(std::string("key: ") + e.what());
  }
}

}  // namespace qcloak
