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

#include "qcloak/simulator.hpp"

#include <algorithm>
#include <random>
#include <stdexcept>

#include "kernels.hpp"
#include "qcloak/errors.hpp"

namespace qcloak {

namespace {
constexpr double kDropBelow = 1e-14;
}

double Statevector::norm_squared() const {
  double s = 0.0;
  for (const Complex& a : amplitudes) s += std::norm(a);
  return s;
}

Statevector run_statevector(const Circuit& circuit, std::size_t cap) {
  const std::size_t limit = std::min(cap, kMaxSimQubits);
  if (circuit.num_qubits() > limit) {
    throw CapacityError("simulation limited to " + std::to_string(limit) + " qubits, got " +
                        std::to_string(circuit.num_qubits()));
  }
  Statevector sv;
  sv.num_qubits = circuit.num_qubits();
  const std::size_t dim = std::size_t{1} << sv.num_qubits;
  sv.amplitudes.assign(dim, Complex{0.0, 0.0});
  sv.amplitudes[0] = 1.0;
  for (const Gate& g : circuit.gates()) detail::apply_gate(sv.amplitudes.data(), dim, g);
  return sv;
}

Distribution ideal_distribution(const Circuit& circuit, std::size_t cap) {
  Statevector sv = run_statevector(circuit, cap);
  const std::vector<Qubit> measured = circuit.output_qubits();
  const std::size_t m = measured.size();
  std::vector<double> marginal(std::size_t{1} << m, 0.0);
  for (std::size_t k = 0; k < sv.amplitudes.size(); ++k) {
    double p = std::norm(sv.amplitudes[k]);
    if (p == 0.0) continue;
    std::size_t idx = 0;
    for (std::size_t j = 0; j < m; ++j) idx |= ((k >> measured[j]) & 1U) << j;
    marginal[idx] += p;
  }
  Distribution d;
  d.kind = DistributionKind::Probability;
  d.num_bits = m;
  for (std::size_t idx = 0; idx < marginal.size(); ++idx) {
    if (marginal[idx] >= kDropBelow) d.outcomes.emplace(to_bitstring(idx, m), marginal[idx]);
  }
  return d;
}

Distribution sample_distribution(const Distribution& probabilities, std::size_t shots,
                                 std::uint64_t seed) {
  if (shots == 0) throw std::invalid_argument("shots must be positive");
  Distribution p = probabilities.normalized();
  std::vector<const std::string*> keys;
  std::vector<double> cumulative;
  double acc = 0.0;
  for (const auto& [s, v] : p.outcomes) {
    if (v <= 0.0) continue;
    acc += v;
    keys.push_back(&s);
    cumulative.push_back(acc);
  }
  if (keys.empty()) throw std::invalid_argument("cannot sample an empty distribution");
  std::mt19937_64 rng(seed);
  std::uniform_real_distribution<double> uni(0.0, acc);
  std::vector<std::uint64_t> tally(keys.size(), 0);
  for (std::size_t s = 0; s < shots; ++s) {
    double r = uni(rng);
    auto it = std::upper_bound(cumulative.begin(), cumulative.end(), r);
    std::size_t i = std::min<std::size_t>(it - cumulative.begin(), keys.size() - 1);
    ++tally[i];
  }
  Distribution out;
  out.kind = DistributionKind::Counts;
  out.num_bits = p.num_bits;
  for (std::size_t i = 0; i < keys.size(); ++i) {
    if (tally[i] > 0) out.outcomes.emplace(*keys[i], static_cast<double>(tally[i]));
  }
  return out;
}

Distribution sample(const Circuit& circuit, std::size_t shots, std::uint64_t seed,
                    std::size_t cap) {
  return sample_distribution(ideal_distribution(circuit, cap), shots, seed);
}

double expectation(const Distribution& dist,
                   const std::function<double(const std::string&)>& observable) {
  Distribution p = dist.normalized();
  double e = 0.0;
  for (const auto& [s, v] : p.outcomes) e += v * observable(s);
  return e;
}

double expectation(const Distribution& dist, const std::map<std::string, double>& observable) {
  return expectation(dist, [&](const std::string& s) {
    auto it = observable.find(s);
    if (it == observable.end()) {
      throw std::invalid_argument("observable has no value for outcome " + s);
    }
    return it->second;
  });
}

}  // namespace qcloak
