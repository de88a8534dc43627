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

#include "qcloak/distribution.hpp"

#include <cmath>

#include <nlohmann/json.hpp>

#include "qcloak/errors.hpp"

namespace qcloak {

double Distribution::total() const {
  double sum = 0.0;
  for (const auto& [s, v] : outcomes) sum += v;
  return sum;
}

Distribution Distribution::normalized() const {
  Distribution out = *this;
  out.kind = DistributionKind::Probability;
  if (kind == DistributionKind::Counts) {
    double t = total();
    if (t > 0) {
      for (auto& [s, v] : out.outcomes) v /= t;
    }
  }
  return out;
}

double Distribution::at(const std::string& outcome) const {
  auto it = outcomes.find(outcome);
  return it == outcomes.end() ? 0.0 : it->second;
}

std::string to_bitstring(std::uint64_t index, std::size_t num_bits) {
  std::string s(num_bits, '0');
  for (std::size_t b = 0; b < num_bits && b < 64; ++b) {
    if ((index >> b) & 1U) s[num_bits - 1 - b] = '1';
  }
  return s;
}

std::string distribution_to_json(const Distribution& dist) {
  nlohmann::ordered_json j;
  j["kind"] = dist.kind == DistributionKind::Counts ? "counts" : "probability";
  j["num_bits"] = dist.num_bits;
  nlohmann::ordered_json outcomes = nlohmann::ordered_json::object();
  for (const auto& [s, v] : dist.outcomes) {
    if (dist.kind == DistributionKind::Counts) {
      outcomes[s] = static_cast<std::uint64_t>(std::llround(v));
    } else {
      outcomes[s] = v;
    }
  }
  j["outcomes"] = std::move(outcomes);
  return j.dump(2) + "\n";
}

Distribution distribution_from_json(std::string_view text) {
  nlohmann::json j;
  try {
    j = nlohmann::json::parse(text);
  } catch (const nlohmann::json::exception& e) {
    throw FormatError(std::string("distribution: ") + e.what());
  }
  try {
    Distribution d;
    std::string kind = j.at("kind").get<std::string>();
    if (kind == "counts") {
      d.kind = DistributionKind::Counts;
    } else if (kind == "probability") {
      d.kind = DistributionKind::Probability;
    } else {
      throw FormatError("distribution: unknown kind '" + kind + "'");
    }
    d.num_bits = j.at("num_bits").get<std::size_t>();
    for (const auto& [s, v] : j.at("outcomes").items()) {
      if (s.size() != d.num_bits || s.find_first_not_of("01") != std::string::npos) {
        throw FormatError("distribution: outcome '" + s + "' is not a " +
                          std::to_string(d.num_bits) + "-bit string");
      }
      double value = v.get<double>();
      if (!(value >= 0.0) || !std::isfinite(value)) {
        throw FormatError("distribution: negative or non-finite value for '" + s + "'");
      }
      if (d.kind == DistributionKind::Counts && value != std::floor(value)) {
        throw FormatError("distribution: non-integer count for '" + s + "'");
      }
      d.outcomes[s] = value;
    }
    return d;
  } catch (const nlohmann::json::exception& e) {
    throw FormatError(std::string("distribution: ") + e.what());
  }
}

}  // namespace qcloak
