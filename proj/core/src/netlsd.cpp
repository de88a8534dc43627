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

#include "qcloak/netlsd.hpp"

#include <algorithm>
#include <cmath>
#include <map>
#include <sstream>
#include <stdexcept>

#include <Eigen/Dense>
#include <boost/graph/adjacency_list.hpp>
#include <boost/graph/cuthill_mckee_ordering.hpp>
#include <lapacke.h>

#include "qcloak/qasm.hpp"

namespace qcloak {

namespace {

using EdgeWeights = std::map<std::pair<std::size_t, std::size_t>, double>;

EdgeWeights symmetrise(const std::vector<std::pair<std::size_t, std::size_t>>& edges) {
  EdgeWeights w;
  for (auto [u, v] : edges) {
    if (u == v) continue;
    if (u > v) std::swap(u, v);
    w[{u, v}] += 1.0;
  }
  return w;
}

std::vector<double> dense_spectrum(std::size_t n, const EdgeWeights& w,
                                   const std::vector<double>& inv_sqrt_deg,
                                   const std::vector<bool>& isolated) {
  Eigen::MatrixXd lap = Eigen::MatrixXd::Zero(n, n);
  for (std::size_t i = 0; i < n; ++i) lap(i, i) = isolated[i] ? 0.0 : 1.0;
  for (const auto& [e, x] : w) {
    double v = -x * inv_sqrt_deg[e.first] * inv_sqrt_deg[e.second];
    lap(e.first, e.second) = v;
    lap(e.second, e.first) = v;
  }
  Eigen::SelfAdjointEigenSolver<Eigen::MatrixXd> es(lap, Eigen::EigenvaluesOnly);
  const auto& ev = es.eigenvalues();
  return std::vector<double>(ev.data(), ev.data() + ev.size());
}

// Reverse Cuthill-McKee relabelling, then LAPACK's banded symmetric
// eigensolver. Returns empty when the bandwidth stays too wide to pay off.
std::vector<double> banded_spectrum(std::size_t n, const EdgeWeights& w,
                                    const std::vector<double>& inv_sqrt_deg,
                                    const std::vector<bool>& isolated) {
  using Graph = boost::adjacency_list<boost::vecS, boost::vecS, boost::undirectedS>;
  Graph g(n);
  for (const auto& [e, x] : w) boost::add_edge(e.first, e.second, g);
  std::vector<Graph::vertex_descriptor> order;
  order.reserve(n);
  boost::cuthill_mckee_ordering(g, std::back_inserter(order));
  if (order.size() != n) return {};
  std::vector<std::size_t> pos(n);
  for (std::size_t i = 0; i < n; ++i) pos[order[n - 1 - i]] = i;

  std::size_t kd = 0;
  for (const auto& [e, x] : w) {
    std::size_t a = pos[e.first], b = pos[e.second];
    kd = std::max(kd, a > b ? a - b : b - a);
  }
  if (kd * 4 > n) return {};

  // Lower band storage, column-major: ab[(i - j) + j * (kd + 1)].
  const std::size_t ld = kd + 1;
  std::vector<double> ab(ld * n, 0.0);
  for (std::size_t v = 0; v < n; ++v) ab[pos[v] * ld] = isolated[v] ? 0.0 : 1.0;
  for (const auto& [e, x] : w) {
    std::size_t a = pos[e.first], b = pos[e.second];
    std::size_t i = std::max(a, b), j = std::min(a, b);
    ab[(i - j) + j * ld] = -x * inv_sqrt_deg[e.first] * inv_sqrt_deg[e.second];
  }
  std::vector<double> eig(n);
  double dummy = 0.0;
  lapack_int info = LAPACKE_dsbev_2stage(LAPACK_COL_MAJOR, 'N', 'L', static_cast<lapack_int>(n),
                                         static_cast<lapack_int>(kd), ab.data(),
                                         static_cast<lapack_int>(ld), eig.data(), &dummy, 1);
  if (info != 0) throw std::runtime_error("banded eigensolver failed");
  return eig;
}

}  // namespace

std::vector<double> NetlsdGrid::timescales() const {
  std::vector<double> t(points);
  if (points == 1) {
    t[0] = t_min;
    return t;
  }
  const double a = std::log10(t_min), b = std::log10(t_max);
  for (std::size_t i = 0; i < points; ++i) {
    t[i] = std::pow(10.0, a + (b - a) * static_cast<double>(i) / static_cast<double>(points - 1));
  }
  return t;
}

std::vector<double> normalized_laplacian_spectrum(
    std::size_t num_nodes, const std::vector<std::pair<std::size_t, std::size_t>>& edges) {
  EdgeWeights w = symmetrise(edges);
  std::vector<double> deg(num_nodes, 0.0);
  for (const auto& [e, x] : w) {
    if (e.second >= num_nodes) throw std::out_of_range("edge endpoint outside graph");
    deg[e.first] += x;
    deg[e.second] += x;
  }
  std::vector<double> inv_sqrt(num_nodes, 0.0);
  std::vector<bool> isolated(num_nodes, false);
  for (std::size_t i = 0; i < num_nodes; ++i) {
    isolated[i] = deg[i] == 0.0;
    inv_sqrt[i] = isolated[i] ? 0.0 : 1.0 / std::sqrt(deg[i]);
  }
  std::vector<double> spec;
  if (num_nodes > kDenseSpectrumLimit) spec = banded_spectrum(num_nodes, w, inv_sqrt, isolated);
  if (spec.empty()) spec = dense_spectrum(num_nodes, w, inv_sqrt, isolated);
  std::sort(spec.begin(), spec.end());
  return spec;
}

HeatSignature heat_signature(const std::vector<double>& spectrum, const NetlsdGrid& grid) {
  HeatSignature sig;
  sig.timescales = grid.timescales();
  sig.traces.resize(sig.timescales.size());
  for (std::size_t i = 0; i < sig.timescales.size(); ++i) {
    double h = 0.0;
    for (double lambda : spectrum) h += std::exp(-sig.timescales[i] * lambda);
    sig.traces[i] = h;
  }
  return sig;
}

HeatSignature netlsd_signature(const CircuitDag& dag, const NetlsdGrid& grid) {
  return heat_signature(normalized_laplacian_spectrum(dag.num_nodes(), dag.edges), grid);
}

double signature_distance(const HeatSignature& a, const HeatSignature& b) {
  if (a.traces.size() != b.traces.size()) {
    throw std::invalid_argument("signatures use different grids");
  }
  double s = 0.0;
  for (std::size_t i = 0; i < a.traces.size(); ++i) {
    double d = a.traces[i] - b.traces[i];
    s += d * d;
  }
  return std::sqrt(s);
}

double netlsd_divergence(const Circuit& a, const Circuit& b, const NetlsdGrid& grid) {
  return signature_distance(netlsd_signature(to_dag(a), grid), netlsd_signature(to_dag(b), grid));
}

std::string signature_to_csv(const HeatSignature& sig) {
  std::ostringstream out;
  out << "t,h\n";
  for (std::size_t i = 0; i < sig.timescales.size(); ++i) {
    out << format_angle(sig.timescales[i]) << ',' << format_angle(sig.traces[i]) << '\n';
  }
  return out.str();
}

}  // namespace qcloak
