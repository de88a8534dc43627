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
#include <optional>
#include <string>
#include <utility>
#include <vector>

#include "qcloak/circuit.hpp"
#include "qcloak/distribution.hpp"
#include "qcloak/pipeline.hpp"

namespace qcloak {

/// Hadamard as RZ(pi/2) SX RZ(pi/2).
void append_h(Circuit& c, Qubit q);
/// Controlled phase diag(1, 1, 1, e^{i lambda}) up to global phase.
void append_cphase(Circuit& c, Qubit control, Qubit target, double lambda);
/// Controlled RY(theta).
void append_cry(Circuit& c, Qubit control, Qubit target, double theta);
/// Toffoli with six CX.
void append_ccx(Circuit& c, Qubit c1, Qubit c2, Qubit target);

/// QFT without the final swaps: output qubit order is reversed.
Circuit gen_qft(std::size_t n);
Circuit gen_ghz(std::size_t n);
Circuit gen_wstate(std::size_t n);

/// Ripple-carry adder wiring. Odd n: m = (n-1)/2 bit operands, sum mod
/// 2^m. Even n: m = (n-2)/2 plus a carry-out qubit.
struct AdderLayout {
  std::size_t m = 0;
  Qubit carry_in = 0;
  std::vector<Qubit> a;
  std::vector<Qubit> b;
  std::optional<Qubit> carry_out;
};
AdderLayout adder_layout(std::size_t n);

/// |a>|b> -> |a>|a+b>, inputs prepared with X gates. Defaults: a = 1,
/// b = 2^m - 1.
Circuit gen_adder(std::size_t n, std::optional<std::uint64_t> a = std::nullopt,
                  std::optional<std::uint64_t> b = std::nullopt);

/// Brickwork of random two-qubit blocks (random one-qubit gates around 1-3
/// CX in random orientations).
Circuit gen_random_blocks(std::size_t n, std::size_t layers, std::uint64_t seed);

struct MaxCutProblem {
  std::size_t num_nodes = 0;
  std::vector<std::pair<Qubit, Qubit>> edges;
  std::size_t qaoa_layers = 1;
  /// gamma_1, beta_1, gamma_2, beta_2, ...
  std::vector<double> parameters;

  static MaxCutProblem ring(std::size_t n, std::size_t layers = 1);
  /// Throws std::invalid_argument on bad edges or parameter count.
  void validate() const;
};

/// Edges cut by the outcome (bit q is character n-1-q).
double cut_value(const MaxCutProblem& prob, const std::string& outcome);

Circuit build_qaoa_circuit(const MaxCutProblem& prob);

struct NelderMeadResult {
  std::vector<double> x;
  double fx = 0.0;
  /// Best simplex value after each iteration.
  std::vector<double> history;
};

/// Standard reflection/expansion/contraction/shrink with coefficients
/// 1, 2, 0.5, 0.5, stopping after `max_iterations`.
NelderMeadResult nelder_mead(const std::function<double(const std::vector<double>&)>& f,
                             std::vector<double> x0, double step, std::size_t max_iterations);

enum class QaoaMode { Baseline, Corrected, Uncorrected };
std::string to_string(QaoaMode mode);

struct QaoaResult {
  QaoaMode mode = QaoaMode::Baseline;
  std::vector<double> losses;
  std::vector<double> parameters;
  Distribution final_distribution;
  double final_loss = 0.0;
};

/// Optimises the QAOA parameters with loss = -E[cut]. Every evaluation
/// rebuilds the circuit; corrected/uncorrected modes re-encode with a
/// fresh key and only corrected mode decodes the sampled output.
QaoaResult run_qaoa_case_study(const MaxCutProblem& prob, QaoaMode mode,
                               std::size_t iterations, std::uint64_t seed, std::size_t shots,
                               const PipelineConfig& cfg = {});

/// CSV with header `iteration,loss,mode`.
std::string loss_trace_csv(const QaoaResult& result);

struct NamedCircuit {
  std::string name;
  Circuit circuit;
};

/// GHZ{4,8,12}, W{4,8}, QFT{4,8}, ADD{4,9} and QAOA ring-4 at its p=1
/// optimum.
std::vector<NamedCircuit> desk_benchmarks();

}  // namespace qcloak
