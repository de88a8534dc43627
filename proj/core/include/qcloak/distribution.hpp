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
#include <map>
#include <string>
#include <string_view>

namespace qcloak {

enum class DistributionKind { Probability, Counts };

/// Outcome strings are `num_bits` characters of '0'/'1' with classical bit
/// 0 as the rightmost character.
struct Distribution {
  DistributionKind kind = DistributionKind::Probability;
  std::size_t num_bits = 0;
  std::map<std::string, double> outcomes;

  double total() const;
  /// Probability-kind copy (counts divided by their total).
  Distribution normalized() const;
  double at(const std::string& outcome) const;

  bool operator==(const Distribution&) const = default;
};

/// `num_bits`-character string for the basis index, bit 0 rightmost.
std::string to_bitstring(std::uint64_t index, std::size_t num_bits);

std::string distribution_to_json(const Distribution& dist);
/// Throws FormatError on malformed input.
Distribution distribution_from_json(std::string_view text);

}  // namespace qcloak
