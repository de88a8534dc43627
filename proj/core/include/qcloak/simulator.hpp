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
#include <functional>
#include <map>
#include <string>
#include <vector>

#include "qcloak/circuit.hpp"
#include "qcloak/distribution.hpp"
#include "qcloak/linalg.hpp"

namespace qcloak {

inline constexpr std::size_t kMaxSimQubits = 24;
inline constexpr std::size_t kDefaultShots = 100000;

/// Amplitudes indexed by basis state, qubit 0 the least significant bit.
struct Statevector {
  std::size_t num_qubits = 0;
  std::vector<Complex> amplitudes;

  double norm_squared() const;
};

/// Starts from |0...0> and applies every gate in place. Throws
/// CapacityError above kMaxSimQubits (or `cap`, when smaller).
Statevector run_statevector(const Circuit& circuit, std::size_t cap = kMaxSimQubits);

/// |amplitude|^2 marginalised onto the measured qubits; outcomes below
/// 1e-14 are omitted.
Distribution ideal_distribution(const Circuit& circuit, std::size_t cap = kMaxSimQubits);

/// `shots` independent draws from a probability distribution.
Distribution sample_distribution(const Distribution& probabilities, std::size_t shots,
                                 std::uint64_t seed);

Distribution sample(const Circuit& circuit, std::size_t shots, std::uint64_t seed,
                    std::size_t cap = kMaxSimQubits);

/// Sum of p(s) * observable(s) after normalisation. Throws
/// std::invalid_argument if an outcome in the support has no value.
double expectation(const Distribution& dist, const std::map<std::string, double>& observable);
double expectation(const Distribution& dist,
                   const std::function<double(const std::string&)>& observable);

}  // namespace qcloak
