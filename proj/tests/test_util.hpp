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

// Shared fixtures and independent oracles for the test suites.

#include <cmath>
#include <complex>
#include <numbers>
#include <random>
#include <vector>

#include <Eigen/Dense>

#include "qcloak/circuit.hpp"

namespace qcloak::testing {

using C = std::complex<double>;

inline Circuit random_circuit(std::size_t n, std::size_t g, std::mt19937_64& rng,
                              bool with_rx = true) {
  std::uniform_int_distribution<int> kind(0, with_rx ? 4 : 3);
  std::uniform_int_distribution<Qubit> qubit(0, static_cast<Qubit>(n - 1));
  std::uniform_real_distribution<double> angle(-2 * std::numbers::pi, 2 * std::numbers::pi);
  Circuit c(n);
  for (std::size_t i = 0; i < g; ++i) {
    int k = kind(rng);
    Qubit a = qubit(rng);
    if (k == 0 && n >= 2) {
      Qubit b = qubit(rng);
      while (b == a) b = qubit(rng);
      c.cx(a, b);
    } else if (k == 1) {
      c.x(a);
    } else if (k == 2) {
      c.sx(a);
    } else if (k == 3) {
      c.rz(a, angle(rng));
    } else {
      c.rx(a, angle(rng));
    }
  }
  return c;
}

inline Eigen::MatrixXcd haar_unitary(int dim, std::mt19937_64& rng) {
  std::normal_distribution<double> nd;
  Eigen::MatrixXcd z(dim, dim);
  for (int i = 0; i < dim; ++i) {
    for (int j = 0; j < dim; ++j) z(i, j) = C(nd(rng), nd(rng)) / std::sqrt(2.0);
  }
  Eigen::HouseholderQR<Eigen::MatrixXcd> qr(z);
  Eigen::MatrixXcd q = qr.householderQ();
  Eigen::MatrixXcd r = qr.matrixQR().triangularView<Eigen::Upper>();
  for (int j = 0; j < dim; ++j) q.col(j) *= r(j, j) / std::abs(r(j, j));
  return q;
}

/// Reference gate matrices written out independently of the library.
inline Eigen::Matrix2cd ref_1q(const Gate& g) {
  const C i(0, 1);
  Eigen::Matrix2cd m;
  switch (g.kind) {
    case GateKind::X:
      m << 0, 1, 1, 0;
      break;
    case GateKind::SX:
      m << C(0.5, 0.5), C(0.5, -0.5), C(0.5, -0.5), C(0.5, 0.5);
      break;
    case GateKind::RZ:
      m << std::exp(-i * g.angle / 2.0), 0, 0, std::exp(i * g.angle / 2.0);
      break;
    case GateKind::RX:
      m << std::cos(g.angle / 2), -i * std::sin(g.angle / 2), -i * std::sin(g.angle / 2),
          std::cos(g.angle / 2);
      break;
    default:
      break;
  }
  return m;
}

/// Dense unitary built from basis-state images, one full matrix per gate.
inline Eigen::MatrixXcd oracle_unitary(std::size_t n, const std::vector<Gate>& gates) {
  const std::size_t dim = std::size_t{1} << n;
  Eigen::MatrixXcd u = Eigen::MatrixXcd::Identity(dim, dim);
  for (const Gate& g : gates) {
    Eigen::MatrixXcd full = Eigen::MatrixXcd::Zero(dim, dim);
    for (std::size_t k = 0; k < dim; ++k) {
      if (g.kind == GateKind::CX) {
        std::size_t img = ((k >> g.qubits[0]) & 1U) ? k ^ (std::size_t{1} << g.qubits[1]) : k;
        full(img, k) = 1.0;
      } else {
        Eigen::Matrix2cd m = ref_1q(g);
        std::size_t bit = (k >> g.qubits[0]) & 1U;
        std::size_t k0 = k & ~(std::size_t{1} << g.qubits[0]);
        std::size_t k1 = k0 | (std::size_t{1} << g.qubits[0]);
        full(k0, k) += m(0, bit);
        full(k1, k) += m(1, bit);
      }
    }
    u = full * u;
  }
  return u;
}

/// Gate sequence seen by each wire; equal for circuits that differ only by
/// reordering gates on disjoint wires.
inline std::vector<std::vector<Gate>> wire_sequences(std::size_t n, const std::vector<Gate>& gates) {
  std::vector<std::vector<Gate>> out(n);
  for (const Gate& g : gates) {
    for (unsigned k = 0; k < g.arity(); ++k) out[g.qubits[k]].push_back(g);
  }
  return out;
}

inline double max_abs(const Eigen::MatrixXcd& m) { return m.cwiseAbs().maxCoeff(); }

}  // namespace qcloak::testing
