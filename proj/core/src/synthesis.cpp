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

#include "qcloak/synthesis.hpp"

#include <algorithm>
#include <cmath>
#include <limits>
#include <numbers>
#include <numeric>
#include <optional>
#include <random>
#include <stdexcept>
#include <string>
#include <utility>

#include "qcloak/errors.hpp"
#include "qcloak/rng.hpp"

namespace qcloak {

namespace {

using namespace std::complex_literals;
constexpr double kPi = std::numbers::pi;
// Tolerance for accepting a shorter one-qubit form.
constexpr double kEulerTol = 1e-11;
constexpr double kPeepholeZero = 1e-12;

const Mat4& magic() {
  static const Mat4 b = [] {
    Mat4 m;
    const double r = 1.0 / std::sqrt(2.0);
    m << 1, 0, 0, 1i, 0, 1i, 1, 0, 0, 1i, -1, 0, 1, 0, 0, -1i;
    return Mat4(m * r);
  }();
  return b;
}

// Diagonals of XX, YY, ZZ in the magic basis.
constexpr std::array<double, 4> kXX{1, 1, -1, -1};
constexpr std::array<double, 4> kYY{-1, 1, -1, 1};
constexpr std::array<double, 4> kZZ{1, -1, -1, 1};

Mat2 ry(double t) {
  Mat2 m;
  m << std::cos(t / 2), -std::sin(t / 2), std::sin(t / 2), std::cos(t / 2);
  return m;
}
Mat2 rz(double t) { return single_qubit_matrix(GateKind::RZ, t); }
Mat2 rx(double t) { return single_qubit_matrix(GateKind::RX, t); }
Mat2 hadamard() {
  Mat2 m;
  m << 1, 1, 1, -1;
  return m / std::sqrt(2.0);
}

Mat4 kron2(const Mat2& high, const Mat2& low) {
  Mat4 out;
  for (int i = 0; i < 2; ++i) {
    for (int j = 0; j < 2; ++j) out.block<2, 2>(2 * i, 2 * j) = high(i, j) * low;
  }
  return out;
}

Mat4 cx_local(Qubit control, Qubit target) {
  return gates_unitary(2, {Gate::cx(control, target)});
}

double wrap_angle(double t) { return std::remainder(t, 2 * kPi); }

// U = phase * B * k1 * diag(h) * k2 * B^dagger with k1, k2 real orthogonal
// of determinant 1 and prod(h) = 1.
struct MagicDecomposition {
  Complex phase;
  Mat4 k1;
  Eigen::Vector4cd h;
  Mat4 k2;
};

MagicDecomposition magic_decompose(const Mat4& u) {
  const Mat4& b = magic();
  Complex phase = std::pow(u.determinant(), 0.25);
  Mat4 up = b.adjoint() * (u / phase) * b;
  Mat4 m2 = up.transpose() * up;
  // Real and imaginary parts of the symmetric unitary m2 commute; a random
  // real combination shares their eigenvectors.
  std::mt19937_64 rng(0x6b616b);
  std::normal_distribution<double> normal;
  Eigen::Matrix4d best;
  double best_off = std::numeric_limits<double>::infinity();
  for (int attempt = 0; attempt < 64 && best_off > 1e-13; ++attempt) {
    double c = attempt == 0 ? 0.5772156649 : normal(rng);
    Eigen::Matrix4d sym = m2.real() + c * m2.imag();
    sym = 0.5 * (sym + sym.transpose()).eval();
    Eigen::SelfAdjointEigenSolver<Eigen::Matrix4d> es(sym);
    Eigen::Matrix4d p = es.eigenvectors();
    Mat4 d = p.transpose().cast<Complex>() * m2 * p.cast<Complex>();
    double off = 0.0;
    for (int i = 0; i < 4; ++i) {
      for (int j = 0; j < 4; ++j) {
        if (i != j) off = std::max(off, std::abs(d(i, j)));
      }
    }
    if (off < best_off) {
      best_off = off;
      best = p;
    }
  }
  if (best.determinant() < 0) best.col(0) *= -1.0;
  Mat4 p = best.cast<Complex>();
  Mat4 d = p.transpose() * m2 * p;
  Eigen::Vector4cd h;
  for (int k = 0; k < 4; ++k) h(k) = std::sqrt(d(k, k));
  Complex prod = h.prod();
  if (std::abs(prod + 1.0) < std::abs(prod - 1.0)) h(0) = -h(0);
  Mat4 k1 = up * p * h.cwiseInverse().asDiagonal();
  return {phase, k1, h, p.transpose()};
}

WeylCoordinates canonicalize(std::array<double, 3> c) {
  for (double& x : c) x -= (kPi / 2) * std::floor((x + kPi / 4) / (kPi / 2));
  std::stable_sort(c.begin(), c.end(),
                   [](double a, double b) { return std::abs(a) > std::abs(b); });
  if (c[0] < 0) {
    c[0] = -c[0];
    c[2] = -c[2];
  }
  if (c[1] < 0) {
    c[1] = -c[1];
    c[2] = -c[2];
  }
  if (std::abs(c[0] - kPi / 4) < 1e-9 && c[2] < 0) c[2] = -c[2];
  return {c[0], c[1], c[2]};
}

// u = phase * left * v * right with left, right in SU(2) (x) SU(2).
struct Alignment {
  Complex phase;
  Mat4 left;
  Mat4 right;
};

std::optional<Alignment> align(const Mat4& u, const Mat4& v, std::mt19937_64* rng) {
  MagicDecomposition du = magic_decompose(u);
  MagicDecomposition dv = magic_decompose(v);
  struct Combo {
    std::array<int, 4> perm;
    Complex c;
    Eigen::Vector4d s;
    double err;
  };
  std::vector<Combo> combos;
  std::array<int, 4> perm{0, 1, 2, 3};
  const std::array<Complex, 4> units{1.0, 1i, -1.0, -1i};
  do {
    for (Complex c : units) {
      Combo combo{perm, c, {}, 0.0};
      for (int k = 0; k < 4; ++k) {
        Complex r = du.h(k) / (c * dv.h(perm[k]));
        combo.s(k) = r.real() >= 0 ? 1.0 : -1.0;
        combo.err = std::max(combo.err, std::abs(r - combo.s(k)));
      }
      combos.push_back(combo);
    }
  } while (std::next_permutation(perm.begin(), perm.end()));
  auto best = std::min_element(combos.begin(), combos.end(),
                               [](const Combo& a, const Combo& b) { return a.err < b.err; });
  if (best->err > 1e-6) return std::nullopt;
  Combo chosen = *best;
  if (rng != nullptr) {
    std::vector<const Combo*> good;
    double cutoff = std::max(1e-9, 4 * best->err);
    for (const Combo& c : combos) {
      if (c.err <= cutoff) good.push_back(&c);
    }
    std::uniform_int_distribution<std::size_t> pick(0, good.size() - 1);
    chosen = *good[pick(*rng)];
  }
  Mat4 q = Mat4::Zero();
  for (int k = 0; k < 4; ++k) q(k, chosen.perm[k]) = 1.0;
  if (q.real().determinant() < 0) q.row(0) *= -1.0;
  Mat4 s = chosen.s.cast<Complex>().asDiagonal();
  Mat4 lm = du.k1 * s * q * dv.k1.transpose();
  Mat4 rm = dv.k2.transpose() * q.transpose() * du.k2;
  const Mat4& b = magic();
  return Alignment{du.phase * chosen.c / dv.phase, b * lm * b.adjoint(),
                   b * rm * b.adjoint()};
}

// Splits a local 4x4 into (high, low) with m = kron(high, low).
std::pair<Mat2, Mat2> factor_local(const Mat4& m) {
  int bi = 0, bj = 0;
  double best = -1.0;
  for (int i = 0; i < 2; ++i) {
    for (int j = 0; j < 2; ++j) {
      double n = m.block<2, 2>(2 * i, 2 * j).norm();
      if (n > best) {
        best = n;
        bi = i;
        bj = j;
      }
    }
  }
  Mat2 blk = m.block<2, 2>(2 * bi, 2 * bj);
  Mat2 low = blk / std::sqrt(blk.determinant());
  Mat2 high;
  for (int p = 0; p < 2; ++p) {
    for (int q = 0; q < 2; ++q) {
      high(p, q) = (low.adjoint() * m.block<2, 2>(2 * p, 2 * q)).trace() / 2.0;
    }
  }
  return {high, low};
}

// CX skeleton with a pair of local matrices around every CX.
// locals[i][w] acts on local wire w before cxs[i]; the last entry follows
// the final CX.
struct Skeleton {
  std::vector<std::pair<Qubit, Qubit>> cxs;
  std::vector<std::array<Mat2, 2>> locals;

  Mat4 unitary() const {
    Mat4 m = kron2(locals[0][1], locals[0][0]);
    for (std::size_t i = 0; i < cxs.size(); ++i) {
      m = kron2(locals[i + 1][1], locals[i + 1][0]) * cx_local(cxs[i].first, cxs[i].second) * m;
    }
    return m;
  }
};

Skeleton skeleton_for(unsigned count, const WeylCoordinates& w) {
  const std::array<Mat2, 2> id{Mat2::Identity(), Mat2::Identity()};
  Skeleton s;
  switch (count) {
    case 0:
      s.locals = {id};
      break;
    case 1:
      s.cxs = {{0, 1}};
      s.locals = {id, id};
      break;
    case 2:
      s.cxs = {{0, 1}, {0, 1}};
      s.locals = {id, {rx(2 * w.c1), rz(2 * w.c2)}, id};
      break;
    default:
      s.cxs = {{1, 0}, {0, 1}, {1, 0}};
      s.locals = {id,
                  {rz(kPi / 2 - 2 * w.c3), ry(2 * w.c1 - kPi / 2)},
                  {Mat2::Identity(), ry(kPi / 2 - 2 * w.c2)},
                  id};
      break;
  }
  return s;
}

// Template rewrites that keep the unitary fixed up to local equivalence.
void randomize(Skeleton& s, std::mt19937_64& rng) {
  std::bernoulli_distribution coin(0.5);
  std::uniform_real_distribution<double> angle(0.0, 2 * kPi);
  if (coin(rng)) {
    for (auto& cx : s.cxs) std::swap(cx.first, cx.second);
    for (auto& l : s.locals) std::swap(l[0], l[1]);
  }
  const Mat2 h = hadamard();
  for (std::size_t i = 0; i < s.cxs.size(); ++i) {
    if (coin(rng)) {
      std::swap(s.cxs[i].first, s.cxs[i].second);
      for (int w = 0; w < 2; ++w) {
        s.locals[i][w] = h * s.locals[i][w];
        s.locals[i + 1][w] = s.locals[i + 1][w] * h;
      }
    }
  }
  for (std::size_t i = 0; i < s.cxs.size(); ++i) {
    if (!coin(rng)) continue;
    auto [c, t] = s.cxs[i];
    double phi = angle(rng), psi = angle(rng);
    s.locals[i][c] = rz(phi) * s.locals[i][c];
    s.locals[i + 1][c] = s.locals[i + 1][c] * rz(-phi);
    s.locals[i][t] = rx(psi) * s.locals[i][t];
    s.locals[i + 1][t] = s.locals[i + 1][t] * rx(-psi);
  }
}

Mat2 sequence_matrix(const std::vector<Gate>& gates) {
  Mat2 m = Mat2::Identity();
  for (const Gate& g : gates) m = single_qubit_matrix(g.kind, g.angle) * m;
  return m;
}

std::vector<Gate> relabel(std::vector<Gate> gates, const std::vector<Qubit>& wires) {
  for (Gate& g : gates) {
    g.qubits[0] = wires[g.qubits[0]];
    g.qubits[1] = g.kind == GateKind::CX ? wires[g.qubits[1]] : g.qubits[0];
  }
  return gates;
}

// Euler form with optional structural variation.
std::vector<Gate> euler_variant(const Mat2& u, Qubit q, std::mt19937_64* rng) {
  if (rng == nullptr) return euler_1q(u, q);
  std::uniform_int_distribution<int> mode(0, 2);
  std::uniform_real_distribution<double> angle(0.0, 2 * kPi);
  std::vector<Gate> out;
  switch (mode(*rng)) {
    case 0: {
      double a = angle(*rng);
      out = euler_1q(rz(-a) * u, q);
      out.push_back(Gate::rz(q, a));
      break;
    }
    case 1: {
      const Mat2 x = single_qubit_matrix(GateKind::X);
      out.push_back(Gate::x(q));
      auto rest = euler_1q(u * x, q);
      out.insert(out.end(), rest.begin(), rest.end());
      break;
    }
    default: {
      const Mat2 sx = single_qubit_matrix(GateKind::SX);
      out.push_back(Gate::sx(q));
      auto rest = euler_1q(u * sx.adjoint(), q);
      out.insert(out.end(), rest.begin(), rest.end());
      break;
    }
  }
  return peephole(out);
}

std::vector<Gate> emit(const Skeleton& s, std::mt19937_64* rng) {
  std::vector<Gate> out;
  for (std::size_t i = 0; i < s.locals.size(); ++i) {
    for (Qubit w = 0; w < 2; ++w) {
      auto part = euler_variant(s.locals[i][w], w, rng);
      out.insert(out.end(), part.begin(), part.end());
    }
    if (i < s.cxs.size()) out.push_back(Gate::cx(s.cxs[i].first, s.cxs[i].second));
  }
  return peephole(out);
}

// Local-wire fragment with exactly `count` CX for u, or nullopt if the
// class does not admit it. With rng, the result is a randomized variant.
std::optional<std::vector<Gate>> synthesize_2q(const Mat4& u, unsigned count,
                                               const WeylCoordinates& w,
                                               std::mt19937_64* rng, double tol) {
  Skeleton s = skeleton_for(count, w);
  if (count == 0) {
    auto [high, low] = factor_local(u);
    s.locals[0] = {low, high};
  } else {
    if (rng != nullptr) randomize(s, *rng);
    auto al = align(u, s.unitary(), rng);
    if (!al) return std::nullopt;
    auto [r1, r0] = factor_local(al->right);
    auto [l1, l0] = factor_local(al->left);
    s.locals.front()[0] = s.locals.front()[0] * r0;
    s.locals.front()[1] = s.locals.front()[1] * r1;
    s.locals.back()[0] = l0 * s.locals.back()[0];
    s.locals.back()[1] = l1 * s.locals.back()[1];
  }
  // The structural variation of one-qubit slots is reserved for
  // CX-free fragments; elsewhere the template rewrites already vary them.
  std::vector<Gate> gates = emit(s, count == 0 ? rng : nullptr);
  if (phase_distance(gates_unitary(2, gates), u) > tol) return std::nullopt;
  return gates;
}

std::size_t cx_count(const std::vector<Gate>& gates) {
  return static_cast<std::size_t>(std::count_if(
      gates.begin(), gates.end(), [](const Gate& g) { return g.kind == GateKind::CX; }));
}

}  // namespace

Mat4 canonical_gate(const WeylCoordinates& w) {
  Eigen::Vector4cd d;
  for (int k = 0; k < 4; ++k) {
    d(k) = std::exp(1i * (w.c1 * kXX[k] + w.c2 * kYY[k] + w.c3 * kZZ[k]));
  }
  const Mat4& b = magic();
  return b * d.asDiagonal() * b.adjoint();
}

WeylCoordinates weyl_coordinates(const Mat4& u) {
  MagicDecomposition d = magic_decompose(u);
  std::array<double, 4> th;
  for (int k = 0; k < 4; ++k) th[k] = std::arg(d.h(k));
  return canonicalize({(th[0] + th[1] - th[2] - th[3]) / 4, (-th[0] + th[1] - th[2] + th[3]) / 4,
                       (th[0] - th[1] - th[2] + th[3]) / 4});
}

unsigned min_cx_count(const WeylCoordinates& w, double tol) {
  bool z1 = std::abs(w.c1) < tol, z2 = std::abs(w.c2) < tol, z3 = std::abs(w.c3) < tol;
  if (z1 && z2 && z3) return 0;
  if (std::abs(w.c1 - kPi / 4) < tol && z2 && z3) return 1;
  if (z3) return 2;
  return 3;
}

KakTerms kak_decompose(const Mat4& u) {
  if (!is_unitary(u, 1e-8)) throw std::invalid_argument("kak_decompose: input is not unitary");
  KakTerms t;
  t.weyl = weyl_coordinates(u);
  auto al = align(u, canonical_gate(t.weyl), nullptr);
  if (!al) throw SynthesisError("kak_decompose: spectrum alignment failed");
  auto [l1, l0] = factor_local(al->left);
  auto [r1, r0] = factor_local(al->right);
  t.left_locals = {l0, l1};
  t.right_locals = {r0, r1};
  Mat4 rec = kron2(l1, l0) * canonical_gate(t.weyl) * kron2(r1, r0);
  // Fix the phase from the largest entry so the reconstruction is exact.
  Eigen::Index r = 0, c = 0;
  u.cwiseAbs().maxCoeff(&r, &c);
  t.global_phase = std::arg(u(r, c) / rec(r, c));
  return t;
}

Mat4 kak_reconstruct(const KakTerms& t) {
  return std::exp(1i * t.global_phase) * kron2(t.left_locals[1], t.left_locals[0]) *
         canonical_gate(t.weyl) * kron2(t.right_locals[1], t.right_locals[0]);
}

std::vector<Gate> weyl_to_circuit(const KakTerms& t) {
  Mat4 u = kak_reconstruct(t);
  for (unsigned count = min_cx_count(t.weyl); count <= 3; ++count) {
    if (auto gates = synthesize_2q(u, count, t.weyl, nullptr, kEquivTol)) return *gates;
  }
  throw SynthesisError("weyl_to_circuit: no template reproduced the unitary");
}

std::vector<Gate> euler_1q(const Mat2& u, Qubit qubit) {
  const double a00 = std::abs(u(0, 0)), a10 = std::abs(u(1, 0));
  const double theta = 2 * std::atan2(a10, a00);
  const double eps = 1e-14;
  // Each angle from one phase difference, so there is no halving ambiguity.
  double phi = 0.0, lam = 0.0;
  if (a10 <= eps) {
    lam = std::arg(u(1, 1)) - std::arg(u(0, 0));
  } else if (a00 <= eps) {
    phi = std::arg(u(1, 0)) - std::arg(-u(0, 1));
  } else if (a00 >= a10) {
    // phi + lam telescopes over the large diagonal entries.
    phi = std::arg(u(1, 0)) - std::arg(u(0, 0));
    lam = std::arg(u(1, 1)) - std::arg(u(1, 0));
  } else {
    // phi - lam telescopes over the large off-diagonal entries.
    phi = std::arg(u(1, 0)) - std::arg(u(0, 0));
    lam = std::arg(-u(0, 1)) - std::arg(u(0, 0));
  }
  const Qubit q = qubit;

  std::vector<std::vector<Gate>> forms = {
      {Gate::rz(q, lam), Gate::sx(q), Gate::rz(q, theta + kPi), Gate::sx(q),
       Gate::rz(q, phi + kPi)},
      {Gate::rz(q, phi + lam)},
      {Gate::rz(q, lam - kPi / 2), Gate::sx(q), Gate::rz(q, phi + kPi / 2)},
      {Gate::x(q), Gate::rz(q, phi - lam - kPi)},
  };
  std::vector<Gate> best = forms[0];
  for (Gate& g : best) {
    if (g.kind == GateKind::RZ) g.angle = wrap_angle(g.angle);
  }
  auto cost = [](const std::vector<Gate>& f) {
    return std::pair{gate_counts(f).sx_plus_x, f.size()};
  };
  for (auto& f : forms) {
    std::vector<Gate> trimmed;
    for (Gate g : f) {
      if (g.kind == GateKind::RZ) {
        g.angle = wrap_angle(g.angle);
        if (std::abs(g.angle) < kEulerTol) continue;
      }
      trimmed.push_back(g);
    }
    if (phase_distance(sequence_matrix(trimmed), u) > kEulerTol) continue;
    if (cost(trimmed) < cost(best) ||
        phase_distance(sequence_matrix(best), u) > kEulerTol) {
      best = std::move(trimmed);
    }
  }
  return best;
}

std::vector<Gate> peephole(const std::vector<Gate>& gates) {
  std::vector<Gate> cur = gates;
  bool changed = true;
  while (changed) {
    changed = false;
    std::vector<Gate> out;
    std::vector<bool> alive;
    Qubit max_q = 0;
    for (const Gate& g : cur) max_q = std::max({max_q, g.qubits[0], g.qubits[1]});
    std::vector<std::vector<std::size_t>> hist(static_cast<std::size_t>(max_q) + 1);
    auto top = [&](Qubit q) -> Gate* {
      return hist[q].empty() ? nullptr : &out[hist[q].back()];
    };
    auto kill_top = [&](Qubit q) {
      alive[hist[q].back()] = false;
      hist[q].pop_back();
      changed = true;
    };
    for (const Gate& g : cur) {
      if (g.kind == GateKind::CX) {
        hist[g.qubits[0]].push_back(out.size());
        hist[g.qubits[1]].push_back(out.size());
        out.push_back(g);
        alive.push_back(true);
        continue;
      }
      Qubit q = g.qubits[0];
      Gate* prev = top(q);
      if (g.kind == GateKind::RZ) {
        if (std::abs(wrap_angle(g.angle)) < kPeepholeZero) {
          changed = true;
          continue;
        }
        if (prev != nullptr && prev->kind == GateKind::RZ) {
          prev->angle += g.angle;
          changed = true;
          if (std::abs(wrap_angle(prev->angle)) < kPeepholeZero) kill_top(q);
          continue;
        }
      } else if (g.kind == GateKind::SX && prev != nullptr && prev->kind == GateKind::SX) {
        *prev = Gate::x(q);
        changed = true;
        continue;
      } else if (g.kind == GateKind::X && prev != nullptr && prev->kind == GateKind::X) {
        kill_top(q);
        continue;
      }
      hist[q].push_back(out.size());
      out.push_back(g);
      alive.push_back(true);
    }
    cur.clear();
    for (std::size_t i = 0; i < out.size(); ++i) {
      if (alive[i]) cur.push_back(out[i]);
    }
  }
  return cur;
}

std::vector<std::vector<Gate>> generate_candidates(const Block& block, const SynthConfig& cfg) {
  if (cfg.k == 0) throw std::invalid_argument("synthesis: k must be at least 1");
  if (block.gates.empty()) throw std::invalid_argument("synthesis: empty block");
  const UnitaryMatrix u = block_unitary(block);
  const std::size_t cap = cx_count(block.gates);
  std::vector<std::vector<Gate>> out;
  out.reserve(cfg.k);

  for (std::size_t i = 0; i < cfg.k; ++i) {
    std::mt19937_64 rng(derive_seed(cfg.seed, {block.order_index, i}));
    std::mt19937_64* var = i == 0 ? nullptr : &rng;
    std::vector<Gate> local;
    if (block.qubits.size() == 1) {
      Mat2 m = u;
      local = euler_variant(m, 0, var);
      if (phase_distance(sequence_matrix(local), m) > cfg.tol) {
        throw SynthesisError("one-qubit synthesis failed equivalence check on block " +
                             std::to_string(block.order_index));
      }
    } else {
      Mat4 m = u;
      WeylCoordinates w = weyl_coordinates(m);
      unsigned start = std::min<unsigned>(min_cx_count(w), static_cast<unsigned>(cap));
      std::optional<std::vector<Gate>> found;
      for (unsigned count = start; count <= cap && !found; ++count) {
        found = synthesize_2q(m, count, w, var, cfg.tol);
      }
      if (!found) {
        throw SynthesisError("two-qubit synthesis failed equivalence check on block " +
                             std::to_string(block.order_index));
      }
      local = std::move(*found);
    }
    out.push_back(relabel(std::move(local), block.qubits));
  }
  return out;
}

std::size_t select_candidate(const std::vector<std::vector<Gate>>& candidates,
                             const Block& original, const SynthConfig& cfg) {
  if (candidates.empty()) throw std::invalid_argument("select_candidate: no candidates");
  std::vector<std::size_t> order(candidates.size());
  std::iota(order.begin(), order.end(), std::size_t{0});
  std::vector<GateCounts> counts;
  for (const auto& c : candidates) counts.push_back(gate_counts(c));
  std::stable_sort(order.begin(), order.end(), [&](std::size_t a, std::size_t b) {
    if (counts[a].sx_plus_x != counts[b].sx_plus_x) {
      return counts[a].sx_plus_x < counts[b].sx_plus_x;
    }
    if (counts[a].rz != counts[b].rz) return counts[a].rz < counts[b].rz;
    return a < b;
  });
  std::size_t keep = std::clamp<std::size_t>(cfg.shortlist, 1, order.size());
  if (keep == 1) return order.front();

  const std::vector<Qubit>& wires = original.qubits;
  auto to_local = [&](const std::vector<Gate>& gates) {
    std::vector<Gate> local;
    for (Gate g : gates) {
      for (unsigned k = 0; k < g.arity(); ++k) {
        g.qubits[k] = static_cast<Qubit>(
            std::find(wires.begin(), wires.end(), g.qubits[k]) - wires.begin());
      }
      if (g.kind != GateKind::CX) g.qubits[1] = g.qubits[0];
      local.push_back(g);
    }
    return Circuit(wires.size(), std::move(local));
  };
  const HeatSignature reference = netlsd_signature(to_dag(to_local(original.gates)), cfg.grid);
  std::size_t best = order.front();
  double best_div = -1.0;
  for (std::size_t r = 0; r < keep; ++r) {
    std::size_t idx = order[r];
    double d = signature_distance(
        reference, netlsd_signature(to_dag(to_local(candidates[idx])), cfg.grid));
    if (d > best_div) {
      best_div = d;
      best = idx;
    }
  }
  return best;
}

}  // namespace qcloak
