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
#include <string>
#include <utility>
#include <vector>

#include "qcloak/circuit.hpp"
#include "qcloak/dag.hpp"

namespace qcloak {

/// Log-spaced timescales.
struct NetlsdGrid {
  double t_min = 1e-2;
  double t_max = 1e2;
  std::size_t points = 250;

  std::vector<double> timescales() const;
};

/// Heat trace h(t) = tr exp(-t L) sampled on a grid.
struct HeatSignature {
  std::vector<double> timescales;
  std::vector<double> traces;
};

/// Graphs up to this many nodes use a dense symmetric eigensolver; larger
/// ones are bandwidth-reduced and solved as banded matrices.
inline constexpr std::size_t kDenseSpectrumLimit = 3000;

/// Eigenvalues (ascending) of I - D^{-1/2} A D^{-1/2} for the undirected
/// multigraph given by `edges`; repeated edges add weight. Isolated nodes
/// contribute 0.
std::vector<double> normalized_laplacian_spectrum(
    std::size_t num_nodes, const std::vector<std::pair<std::size_t, std::size_t>>& edges);

HeatSignature heat_signature(const std::vector<double>& spectrum, const NetlsdGrid& grid = {});

/// Signature of the symmetrised circuit DAG.
HeatSignature netlsd_signature(const CircuitDag& dag, const NetlsdGrid& grid = {});

/// Euclidean distance between traces on a shared grid.
double signature_distance(const HeatSignature& a, const HeatSignature& b);

double netlsd_divergence(const Circuit& a, const Circuit& b, const NetlsdGrid& grid = {});

/// CSV with header `t,h` and one row per timescale.
std::string signature_to_csv(const HeatSignature& sig);

}  // namespace qcloak
