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

#include "qcloak/analysis.hpp"

#include <chrono>
#include <cmath>
#include <limits>
#include <set>
#include <sstream>
#include <stdexcept>

#include <nlohmann/json.hpp>

#include "qcloak/errors.hpp"
#include "qcloak/qasm.hpp"
#include "qcloak/rng.hpp"
#include "qcloak/simulator.hpp"

namespace qcloak {

namespace {

enum Stream : std::uint64_t { kBaselineShots = 10, kEncodedShots = 11 };

double pct_delta(std::size_t base, std::size_t now) {
  if (base == 0) return now == 0 ? 0.0 : std::numeric_limits<double>::infinity();
  return 100.0 * (static_cast<double>(now) - static_cast<double>(base)) /
         static_cast<double>(base);
}

nlohmann::ordered_json counts_json(const GateCounts& c) {
  nlohmann::ordered_json j;
  j["cx"] = c.cx;
  j["sx_plus_x"] = c.sx_plus_x;
  j["rz"] = c.rz;
  j["rx"] = c.rx;
  return j;
}

template <typename T>
nlohmann::ordered_json opt(const std::optional<T>& v) {
  return v ? nlohmann::ordered_json(*v) : nlohmann::ordered_json(nullptr);
}

nlohmann::ordered_json finite(double v) {
  return std::isfinite(v) ? nlohmann::ordered_json(v) : nlohmann::ordered_json(nullptr);
}

nlohmann::ordered_json to_json(const ComparisonReport& r) {
  nlohmann::ordered_json j;
  j["name"] = r.name;
  j["num_qubits"] = r.num_qubits;
  j["num_blocks"] = r.num_blocks;
  j["rx_pairs"] = r.rx_pairs;
  j["flip_mask"] = r.flip_mask;
  j["simulated"] = r.simulated;
  j["counts"] = {{"original", counts_json(r.original_counts)},
                 {"baseline", counts_json(r.baseline_counts)},
                 {"encoded", counts_json(r.encoded_counts)},
                 {"x_only", counts_json(r.x_only_counts)}};
  j["cx_depth"] = {{"baseline", r.baseline_depth}, {"encoded", r.encoded_depth}};
  j["cx_delta"] = r.cx_delta;
  j["sx_x_delta_pct"] = finite(r.sx_x_delta_pct);
  j["rz_delta_pct"] = finite(r.rz_delta_pct);
  j["depth_delta"] = r.depth_delta;
  j["netlsd"] = r.netlsd;
  j["netlsd_x_only"] = r.netlsd_x_only;
  if (r.simulated) {
    j["tvd_uncorrected"] = r.tvd_uncorrected;
    j["tvd_corrected"] = r.tvd_corrected;
    j["tvd_uncorrected_exact"] = r.tvd_uncorrected_exact;
    j["tvd_corrected_exact"] = r.tvd_corrected_exact;
    j["dominant_state"] =
        r.dominant_state ? nlohmann::ordered_json(*r.dominant_state)
                         : nlohmann::ordered_json("no unique dominant state");
    j["dominant_percentile_uncorrected"] = opt(r.dominant_percentile_uncorrected);
    j["dominant_percentile_corrected"] = opt(r.dominant_percentile_corrected);
    j["uncorrected_top"] = opt(r.uncorrected_top);
  }
  j["wall_times"] = {{"encode_s", r.encode_seconds}, {"baseline_s", r.baseline_seconds}};
  return j;
}

std::string num(double v) { return std::isfinite(v) ? format_angle(v) : ""; }

}  // namespace

double tvd(const Distribution& p1, const Distribution& p2) {
  if (p1.num_bits != p2.num_bits) {
    throw FormatError("tvd: bit-length mismatch (" + std::to_string(p1.num_bits) + " vs " +
                      std::to_string(p2.num_bits) + ")");
  }
  Distribution a = p1.normalized(), b = p2.normalized();
  std::set<std::string> keys;
  for (const auto& [s, v] : a.outcomes) keys.insert(s);
  for (const auto& [s, v] : b.outcomes) keys.insert(s);
  double sum = 0.0;
  for (const auto& s : keys) sum += std::abs(a.at(s) - b.at(s));
  return std::min(1.0, 0.5 * sum);
}

std::optional<std::string> unique_argmax(const Distribution& dist, double tie_tol) {
  Distribution p = dist.normalized();
  const std::string* best = nullptr;
  double top = -1.0, second = -1.0;
  for (const auto& [s, v] : p.outcomes) {
    if (v > top) {
      second = top;
      top = v;
      best = &s;
    } else if (v > second) {
      second = v;
    }
  }
  if (best == nullptr || top - second <= tie_tol) return std::nullopt;
  return *best;
}

double dominant_percentile(const Distribution& reference, const Distribution& candidate) {
  auto star = unique_argmax(reference);
  if (!star) throw std::invalid_argument("no unique dominant state");
  Distribution c = candidate.normalized();
  auto it = c.outcomes.find(*star);
  if (it == c.outcomes.end() || it->second <= 0.0) return 0.0;
  std::size_t support = 0, below = 0;
  for (const auto& [s, v] : c.outcomes) {
    if (v <= 0.0) continue;
    ++support;
    if (v < it->second) ++below;
  }
  if (support <= 1) return 100.0;
  return 100.0 * static_cast<double>(below) / static_cast<double>(support - 1);
}

Circuit make_baseline(const Circuit& circuit, const SynthConfig& cfg) {
  BlockPartition blocks = coalesce_single_qubit_blocks(form_blocks(circuit));
  SynthConfig base = cfg;
  base.shortlist = 1;
  return synthesize_partition(blocks, blocks, base);
}

ComparisonReport compare(const Circuit& original, const PipelineConfig& cfg,
                         const std::string& name, bool structural_only) {
  ComparisonReport r;
  r.name = name;
  r.num_qubits = original.num_qubits();

  auto t0 = std::chrono::steady_clock::now();
  Circuit baseline = make_baseline(original, cfg.baseline_synth());
  r.baseline_seconds = std::chrono::duration<double>(std::chrono::steady_clock::now() - t0).count();

  EncodeResult enc = encode(original, cfg);
  r.encode_seconds = enc.seconds;
  r.num_blocks = enc.num_blocks;
  r.rx_pairs = enc.key.rx_pairs.size();
  r.flip_mask = enc.key.mask_string();
  Circuit x_only = encode_x_only(original, cfg);

  r.original_counts = gate_counts(original);
  r.baseline_counts = gate_counts(baseline);
  r.encoded_counts = gate_counts(enc.circuit);
  r.x_only_counts = gate_counts(x_only);
  r.baseline_depth = cx_depth(baseline);
  r.encoded_depth = cx_depth(enc.circuit);
  r.cx_delta = static_cast<long long>(r.encoded_counts.cx) -
               static_cast<long long>(r.baseline_counts.cx);
  r.sx_x_delta_pct = pct_delta(r.baseline_counts.sx_plus_x, r.encoded_counts.sx_plus_x);
  r.rz_delta_pct = pct_delta(r.baseline_counts.rz, r.encoded_counts.rz);
  r.depth_delta = static_cast<long long>(r.encoded_depth) -
                  static_cast<long long>(r.baseline_depth);

  const HeatSignature base_sig = netlsd_signature(to_dag(baseline), cfg.grid);
  r.netlsd = signature_distance(netlsd_signature(to_dag(enc.circuit), cfg.grid), base_sig);
  r.netlsd_x_only = signature_distance(netlsd_signature(to_dag(x_only), cfg.grid), base_sig);

  if (structural_only || original.num_qubits() > cfg.sim_cap) return r;

  r.simulated = true;
  Distribution base_ideal = ideal_distribution(baseline, cfg.sim_cap);
  Distribution enc_ideal = ideal_distribution(enc.circuit, cfg.sim_cap);
  r.tvd_uncorrected_exact = tvd(enc_ideal, base_ideal);
  r.tvd_corrected_exact = tvd(decode(enc_ideal, enc.key), base_ideal);

  Distribution base_shots =
      sample_distribution(base_ideal, cfg.shots, derive_seed(cfg.seed, {kBaselineShots}));
  Distribution enc_shots =
      sample_distribution(enc_ideal, cfg.shots, derive_seed(cfg.seed, {kEncodedShots}));
  Distribution dec_shots = decode(enc_shots, enc.key);
  r.tvd_uncorrected = tvd(enc_shots, base_shots);
  r.tvd_corrected = tvd(dec_shots, base_shots);
  r.uncorrected_top = unique_argmax(enc_shots, 0.0);
  r.dominant_state = unique_argmax(base_ideal);
  if (r.dominant_state) {
    r.dominant_percentile_uncorrected = dominant_percentile(base_ideal, enc_shots);
    r.dominant_percentile_corrected = dominant_percentile(base_ideal, dec_shots);
  }
  return r;
}

std::string report_to_json(const ComparisonReport& report) {
  return to_json(report).dump(2) + "\n";
}

std::string reports_to_json(const std::vector<ComparisonReport>& reports) {
  nlohmann::ordered_json arr = nlohmann::ordered_json::array();
  for (const auto& r : reports) arr.push_back(to_json(r));
  return arr.dump(2) + "\n";
}

std::string report_csv_header() {
  return "name,num_qubits,num_blocks,rx_pairs,flip_mask,baseline_cx,encoded_cx,cx_delta,"
         "baseline_sx_x,encoded_sx_x,sx_x_delta_pct,baseline_rz,encoded_rz,rz_delta_pct,"
         "baseline_depth,encoded_depth,depth_delta,netlsd,netlsd_x_only,tvd_uncorrected,"
         "tvd_corrected,tvd_corrected_exact,dominant_percentile_uncorrected,"
         "dominant_percentile_corrected,encode_s,baseline_s\n";
}

std::string report_to_csv_row(const ComparisonReport& r) {
  std::ostringstream o;
  auto pct = [](const std::optional<double>& v) { return v ? format_angle(*v) : std::string(); };
  o << r.name << ',' << r.num_qubits << ',' << r.num_blocks << ',' << r.rx_pairs << ','
    << r.flip_mask << ',' << r.baseline_counts.cx << ',' << r.encoded_counts.cx << ','
    << r.cx_delta << ',' << r.baseline_counts.sx_plus_x << ',' << r.encoded_counts.sx_plus_x
    << ',' << num(r.sx_x_delta_pct) << ',' << r.baseline_counts.rz << ','
    << r.encoded_counts.rz << ',' << num(r.rz_delta_pct) << ',' << r.baseline_depth << ','
    << r.encoded_depth << ',' << r.depth_delta << ',' << num(r.netlsd) << ','
    << num(r.netlsd_x_only) << ',';
  if (r.simulated) {
    o << num(r.tvd_uncorrected) << ',' << num(r.tvd_corrected) << ','
      << num(r.tvd_corrected_exact) << ',';
  } else {
    o << ",,,";
  }
  o << pct(r.dominant_percentile_uncorrected) << ',' << pct(r.dominant_percentile_corrected)
    << ',' << num(r.encode_seconds) << ',' << num(r.baseline_seconds) << '\n';
  return o.str();
}

}  // namespace qcloak
