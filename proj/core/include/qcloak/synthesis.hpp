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

#include <array>
#include <cstddef>
#include <cstdint>
#include <vector>

#include "qcloak/circuit.hpp"
#include "qcloak/linalg.hpp"
#include "qcloak/netlsd.hpp"
#include "qcloak/partition.hpp"

namespace qcloak {

/// Canonical interaction coefficients, pi/4 >= c1 >= c2 >= |c3|.
struct WeylCoordinates {
  double c1 = 0.0;
  double c2 = 0.0;
  double c3 = 0.0;
};

/// U = e^{i global_phase} (L1 (x) L0) exp(i(c1 XX + c2 YY + c3 ZZ)) (R1 (x) R0)
/// where locals[k] acts on local qubit k.
struct KakTerms {
  std::array<Mat2, 2> left_locals{Mat2::Identity(), Mat2::Identity()};
  std::array<Mat2, 2> right_locals{Mat2::Identity(), Mat2::Identity()};
  WeylCoordinates weyl;
  double global_phase = 0.0;
};

struct SynthConfig {
  std::size_t k = 3;
  std::size_t shortlist = 2;
  std::uint64_t seed = 0;
  double tol = kEquivTol;
  NetlsdGrid grid;
};

/// exp(i(c1 XX + c2 YY + c3 ZZ)).
Mat4 canonical_gate(const WeylCoordinates& w);

/// Weyl-chamber coordinates of a 4x4 unitary.
WeylCoordinates weyl_coordinates(const Mat4& u);

/// Fewest CX gates that realise the class: 0, 1, 2 or 3.
unsigned min_cx_count(const WeylCoordinates& w, double tol = 1e-8);

/// Throws std::invalid_argument when `u` is not unitary at 1e-8.
KakTerms kak_decompose(const Mat4& u);
Mat4 kak_reconstruct(const KakTerms& t);

/// Fragment on local wires {0, 1} with the class-minimal CX count.
std::vector<Gate> weyl_to_circuit(const KakTerms& t);

/// RZ/SX form of a one-qubit unitary on `qubit`, at most two SX.
std::vector<Gate> euler_1q(const Mat2& u, Qubit qubit = 0);

/// Merges adjacent RZ, drops RZ(0 mod 2*pi), rewrites SX.SX as X and
/// cancels X.X, wire by wire, until nothing changes.
std::vector<Gate> peephole(const std::vector<Gate>& gates);

/// `cfg.k` fragments (global labels) equivalent to the block, each with at
/// most the block's CX count. Candidate 0 is the canonical synthesis; the
/// rest randomise template orientation and interleaved locals, seeded by
/// (cfg.seed, block.order_index). Throws SynthesisError if a fragment fails
/// its equivalence check.
std::vector<std::vector<Gate>> generate_candidates(const Block& block, const SynthConfig& cfg);

/// Index of the chosen candidate: shortlist by fewest SX+X (then fewest RZ,
/// then index), then the largest NetLSD divergence from `original`.
/// Throws std::invalid_argument on an empty list.
std::size_t select_candidate(const std::vector<std::vector<Gate>>& candidates,
                             const Block& original, const SynthConfig& cfg);

}  // namespace qcloak
