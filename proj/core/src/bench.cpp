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

#include "qcloak/bench.hpp"

#include <algorithm>
#include <cmath>
#include <numbers>
#include <numeric>
#include <random>
#include <sstream>
#include <stdexcept>

#include "qcloak/analysis.hpp"
#include "qcloak/obfuscate.hpp"
#include "qcloak/qasm.hpp"
#include "qcloak/rng.hpp"
#include "qcloak/simulator.hpp"

namespace qcloak {

namespace {
constexpr double kPi = std::numbers::pi;

void append_ry(Circuit& c, Qubit q, double theta) {
  c.rz(q, -kPi / 2).rx(q, theta).rz(q, kPi / 2);
}
}  // namespace

void append_h(Circuit& c, Qubit q) { c.rz(q, kPi / 2).sx(q).rz(q, kPi / 2); }

void append_cphase(Circuit& c, Qubit control, Qubit target, double lambda) {
  c.rz(control, lambda / 2);
  c.cx(control, target).rz(target, -lambda / 2).cx(control, target).rz(target, lambda / 2);
}

void append_cry(Circuit& c, Qubit control, Qubit target, double theta) {
  append_ry(c, target, theta / 2);
  c.cx(control, target);
  append_ry(c, target, -theta / 2);
  c.cx(control, target);
}

void append_ccx(Circuit& c, Qubit a, Qubit b, Qubit t) {
  const double q = kPi / 4;
  append_h(c, t);
  c.cx(b, t).rz(t, -q).cx(a, t).rz(t, q).cx(b, t).rz(t, -q).cx(a, t);
  c.rz(b, q).rz(t, q);
  append_h(c, t);
  c.cx(a, b).rz(a, q).rz(b, -q).cx(a, b);
}

Circuit gen_qft(std::size_t n) {
  if (n == 0) throw std::invalid_argument("qft needs at least one qubit");
  Circuit c(n);
  for (std::size_t jj = n; jj-- > 0;) {
    Qubit j = static_cast<Qubit>(jj);
    append_h(c, j);
    for (std::size_t kk = jj; kk-- > 0;) {
      append_cphase(c, static_cast<Qubit>(kk), j, kPi / std::pow(2.0, static_cast<double>(jj - kk)));
    }
  }
  c.measure_all();
  return c;
}

Circuit gen_ghz(std::size_t n) {
  if (n == 0) throw std::invalid_argument("ghz needs at least one qubit");
  Circuit c(n);
  append_h(c, 0);
  for (Qubit q = 0; q + 1 < n; ++q) c.cx(q, q + 1);
  c.measure_all();
  return c;
}

Circuit gen_wstate(std::size_t n) {
  if (n == 0) throw std::invalid_argument("w state needs at least one qubit");
  Circuit c(n);
  c.x(0);
  for (Qubit i = 0; i + 1 < n; ++i) {
    double theta = 2 * std::acos(std::sqrt(1.0 / static_cast<double>(n - i)));
    append_cry(c, i, i + 1, theta);
    c.cx(i + 1, i);
  }
  c.measure_all();
  return c;
}

AdderLayout adder_layout(std::size_t n) {
  if (n < 3) throw std::invalid_argument("adder needs at least 3 qubits");
  AdderLayout l;
  l.m = n % 2 == 1 ? (n - 1) / 2 : (n - 2) / 2;
  l.carry_in = 0;
  for (std::size_t i = 0; i < l.m; ++i) {
    l.b.push_back(static_cast<Qubit>(1 + 2 * i));
    l.a.push_back(static_cast<Qubit>(2 + 2 * i));
  }
  if (n % 2 == 0) l.carry_out = static_cast<Qubit>(n - 1);
  return l;
}

Circuit gen_adder(std::size_t n, std::optional<std::uint64_t> a_in,
                  std::optional<std::uint64_t> b_in) {
  AdderLayout l = adder_layout(n);
  const std::uint64_t mask = (std::uint64_t{1} << l.m) - 1;
  std::uint64_t a = a_in.value_or(1) & mask;
  std::uint64_t b = b_in.value_or(mask) & mask;
  Circuit c(n);
  for (std::size_t i = 0; i < l.m; ++i) {
    if ((a >> i) & 1U) c.x(l.a[i]);
    if ((b >> i) & 1U) c.x(l.b[i]);
  }
  auto maj = [&](Qubit x, Qubit y, Qubit z) {
    c.cx(z, y).cx(z, x);
    append_ccx(c, x, y, z);
  };
  auto uma = [&](Qubit x, Qubit y, Qubit z) {
    append_ccx(c, x, y, z);
    c.cx(z, x).cx(x, y);
  };
  auto prev = [&](std::size_t i) { return i == 0 ? l.carry_in : l.a[i - 1]; };
  for (std::size_t i = 0; i < l.m; ++i) maj(prev(i), l.b[i], l.a[i]);
  if (l.carry_out) c.cx(l.a[l.m - 1], *l.carry_out);
  for (std::size_t i = l.m; i-- > 0;) uma(prev(i), l.b[i], l.a[i]);
  c.measure_all();
  return c;
}

Circuit gen_random_blocks(std::size_t n, std::size_t layers, std::uint64_t seed) {
  if (n < 2) throw std::invalid_argument("random blocks need at least two qubits");
  std::mt19937_64 rng(seed);
  std::uniform_real_distribution<double> angle(-kPi, kPi);
  std::uniform_int_distribution<int> cx_count(1, 3);
  std::bernoulli_distribution coin(0.5);
  Circuit c(n);
  auto local = [&](Qubit q) {
    c.rz(q, angle(rng));
    if (coin(rng)) c.sx(q).rz(q, angle(rng));
  };
  for (std::size_t layer = 0; layer < layers; ++layer) {
    for (Qubit q = static_cast<Qubit>(layer % 2); q + 1 < n; q += 2) {
      int k = cx_count(rng);
      for (int i = 0; i < k; ++i) {
        local(q);
        local(q + 1);
        if (coin(rng)) {
          c.cx(q, q + 1);
        } else {
          c.cx(q + 1, q);
        }
      }
      local(q);
      local(q + 1);
    }
  }
  c.measure_all();
  return c;
}

MaxCutProblem MaxCutProblem::ring(std::size_t n, std::size_t layers) {
  MaxCutProblem p;
  p.num_nodes = n;
  p.qaoa_layers = layers;
  for (std::size_t i = 0; i < n; ++i) {
    p.edges.emplace_back(static_cast<Qubit>(i), static_cast<Qubit>((i + 1) % n));
  }
  p.parameters.assign(2 * layers, 0.0);
  return p;
}

void MaxCutProblem::validate() const {
  if (num_nodes == 0) throw std::invalid_argument("maxcut: no nodes");
  if (qaoa_layers == 0) throw std::invalid_argument("maxcut: need at least one layer");
  if (parameters.size() != 2 * qaoa_layers) {
    throw std::invalid_argument("maxcut: expected 2p parameters");
  }
  for (auto [u, v] : edges) {
    if (u >= num_nodes || v >= num_nodes) throw std::invalid_argument("maxcut: edge out of range");
    if (u == v) throw std::invalid_argument("maxcut: self-loop");
  }
}

double cut_value(const MaxCutProblem& prob, const std::string& outcome) {
  if (outcome.size() != prob.num_nodes) throw std::invalid_argument("cut_value: length mismatch");
  auto bit = [&](Qubit q) { return outcome[prob.num_nodes - 1 - q]; };
  double cut = 0.0;
  for (auto [u, v] : prob.edges) cut += bit(u) != bit(v) ? 1.0 : 0.0;
  return cut;
}

Circuit build_qaoa_circuit(const MaxCutProblem& prob) {
  prob.validate();
  Circuit c(prob.num_nodes);
  for (Qubit q = 0; q < prob.num_nodes; ++q) append_h(c, q);
  for (std::size_t l = 0; l < prob.qaoa_layers; ++l) {
    double gamma = prob.parameters[2 * l], beta = prob.parameters[2 * l + 1];
    for (auto [u, v] : prob.edges) c.cx(u, v).rz(v, 2 * gamma).cx(u, v);
    for (Qubit q = 0; q < prob.num_nodes; ++q) c.rx(q, 2 * beta);
  }
  c.measure_all();
  return c;
}

NelderMeadResult nelder_mead(const std::function<double(const std::vector<double>&)>& f,
                             std::vector<double> x0, double step, std::size_t max_iterations) {
  const std::size_t d = x0.size();
  std::vector<std::vector<double>> pts(d + 1, x0);
  for (std::size_t i = 0; i < d; ++i) pts[i + 1][i] += step;
  std::vector<double> vals(d + 1);
  for (std::size_t i = 0; i <= d; ++i) vals[i] = f(pts[i]);

  auto combine = [&](const std::vector<double>& a, const std::vector<double>& b, double t) {
    std::vector<double> r(d);
    for (std::size_t i = 0; i < d; ++i) r[i] = a[i] + t * (b[i] - a[i]);
    return r;
  };
  NelderMeadResult res;
  std::vector<std::size_t> idx(d + 1);
  for (std::size_t it = 0; it < max_iterations; ++it) {
    std::iota(idx.begin(), idx.end(), std::size_t{0});
    std::stable_sort(idx.begin(), idx.end(), [&](auto a, auto b) { return vals[a] < vals[b]; });
    const std::size_t best = idx.front(), worst = idx.back(), second = idx[d - 1];
    std::vector<double> centroid(d, 0.0);
    for (std::size_t k = 0; k < d; ++k) {
      for (std::size_t i = 0; i < d; ++i) centroid[i] += pts[idx[k]][i] / static_cast<double>(d);
    }
    std::vector<double> xr = combine(centroid, pts[worst], -1.0);
    double fr = f(xr);
    if (fr < vals[best]) {
      std::vector<double> xe = combine(centroid, pts[worst], -2.0);
      double fe = f(xe);
      if (fe < fr) {
        pts[worst] = xe;
        vals[worst] = fe;
      } else {
        pts[worst] = xr;
        vals[worst] = fr;
      }
    } else if (fr < vals[second]) {
      pts[worst] = xr;
      vals[worst] = fr;
    } else {
      bool outside = fr < vals[worst];
      std::vector<double> xc = outside ? combine(centroid, xr, 0.5)
                                       : combine(centroid, pts[worst], 0.5);
      double fc = f(xc);
      if (fc < (outside ? fr : vals[worst])) {
        pts[worst] = xc;
        vals[worst] = fc;
      } else {
        for (std::size_t k = 1; k <= d; ++k) {
          std::size_t j = idx[k];
          pts[j] = combine(pts[best], pts[j], 0.5);
          vals[j] = f(pts[j]);
        }
      }
    }
    res.history.push_back(*std::min_element(vals.begin(), vals.end()));
  }
  std::size_t b = static_cast<std::size_t>(std::min_element(vals.begin(), vals.end()) - vals.begin());
  res.x = pts[b];
  res.fx = vals[b];
  return res;
}

std::string to_string(QaoaMode mode) {
  switch (mode) {
    case QaoaMode::Baseline:
      return "baseline";
    case QaoaMode::Corrected:
      return "corrected";
    case QaoaMode::Uncorrected:
      return "uncorrected";
  }
  return "?";
}

QaoaResult run_qaoa_case_study(const MaxCutProblem& prob, QaoaMode mode,
                               std::size_t iterations, std::uint64_t seed, std::size_t shots,
                               const PipelineConfig& cfg) {
  prob.validate();
  std::uint64_t evals = 0;
  Distribution last;
  auto loss_of = [&](const Distribution& d) {
    return -expectation(d, [&](const std::string& s) { return cut_value(prob, s); });
  };
  auto evaluate = [&](const std::vector<double>& params) {
    MaxCutProblem p = prob;
    p.parameters = params;
    Circuit c = build_qaoa_circuit(p);
    std::uint64_t s = derive_seed(seed, {++evals});
    if (mode == QaoaMode::Baseline) {
      last = sample(make_baseline(c, cfg.baseline_synth()), shots, s);
    } else {
      PipelineConfig pc = cfg;
      pc.seed = s;
      EncodeResult enc = encode(c, pc);
      last = sample(enc.circuit, shots, derive_seed(s, {0x5a}));
      if (mode == QaoaMode::Corrected) last = decode(last, enc.key);
    }
    return loss_of(last);
  };
  std::vector<double> x0 = prob.parameters;
  if (std::all_of(x0.begin(), x0.end(), [](double v) { return v == 0.0; })) {
    x0.assign(x0.size(), 0.25);
  }
  NelderMeadResult nm = nelder_mead(evaluate, x0, 0.5, iterations);
  QaoaResult r;
  r.mode = mode;
  r.losses = nm.history;
  r.parameters = nm.x;
  r.final_loss = evaluate(nm.x);
  r.final_distribution = last;
  return r;
}

std::string loss_trace_csv(const QaoaResult& result) {
  std::ostringstream o;
  o << "iteration,loss,mode\n";
  for (std::size_t i = 0; i < result.losses.size(); ++i) {
    o << i << ',' << format_angle(result.losses[i]) << ',' << to_string(result.mode) << '\n';
  }
  return o.str();
}

std::vector<NamedCircuit> desk_benchmarks() {
  std::vector<NamedCircuit> out;
  for (std::size_t n : {4, 8, 12}) out.push_back({"GHZ-" + std::to_string(n), gen_ghz(n)});
  for (std::size_t n : {4, 8}) out.push_back({"W-" + std::to_string(n), gen_wstate(n)});
  for (std::size_t n : {4, 8}) out.push_back({"QFT-" + std::to_string(n), gen_qft(n)});
  for (std::size_t n : {4, 9}) out.push_back({"ADD-" + std::to_string(n), gen_adder(n)});
  MaxCutProblem ring = MaxCutProblem::ring(4, 1);
  ring.parameters = {9 * kPi / 8, 7 * kPi / 8};
  out.push_back({"QAOA-ring4", build_qaoa_circuit(ring)});
  return out;
}

}  // namespace qcloak
