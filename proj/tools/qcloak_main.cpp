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

#include <CLI11.hpp>

#include <filesystem>
#include <iostream>
#include <map>
#include <nlohmann/json.hpp>
#include <stdexcept>
#include <string>

#include "qcloak/qcloak.hpp"

namespace {

using qcloak::Circuit;
using qcloak::PipelineConfig;
using Json = nlohmann::ordered_json;

constexpr int kExitFormat = 1;
constexpr int kExitSynthesis = 2;
constexpr int kExitIo = 3;

struct Options {
  PipelineConfig cfg;
  bool structural_only = false;
};

void add_pipeline_flags(CLI::App& cmd, Options& opt) {
  cmd.add_option("--seed", opt.cfg.seed, "Master seed")->capture_default_str();
  cmd.add_option("--k", opt.cfg.k, "Candidates per block")
      ->check(CLI::PositiveNumber)
      ->capture_default_str();
  cmd.add_option("--shortlist", opt.cfg.shortlist, "Fewest-SX+X shortlist size")
      ->check(CLI::PositiveNumber)
      ->capture_default_str();
  cmd.add_option("--rx-density", opt.cfg.rx_density, "Fraction of blocks with an RX pair")
      ->check(CLI::Range(0.0, 1.0))
      ->capture_default_str();
  cmd.add_option("--shots", opt.cfg.shots, "Shots per sampled run")
      ->check(CLI::PositiveNumber)
      ->capture_default_str();
  cmd.add_option("--sim-cap", opt.cfg.sim_cap, "Largest simulated register")
      ->check(CLI::Range(std::size_t{1}, qcloak::kMaxSimQubits))
      ->capture_default_str();
}

Circuit load_circuit(const std::string& path) {
  return qcloak::parse_qasm(qcloak::read_text_file(path));
}

Json counts_json(const qcloak::GateCounts& c) {
  return {{"cx", c.cx}, {"sx_plus_x", c.sx_plus_x}, {"rz", c.rz}, {"rx", c.rx},
          {"total", c.cx + c.sx_plus_x + c.rz + c.rx}};
}

void emit(const Json& summary) { std::cout << summary.dump(2) << "\n"; }

int cmd_encode(const std::string& in, const std::string& out, const std::string& key_path,
               const Options& opt) {
  Circuit src = load_circuit(in);
  std::clog << "encode: " << src.num_qubits() << " qubits, " << src.size() << " gates\n";
  qcloak::EncodeResult enc = qcloak::encode(src, opt.cfg);
  qcloak::Circuit baseline = qcloak::make_baseline(src, opt.cfg.baseline_synth());
  qcloak::write_file_atomic(out, qcloak::serialize_qasm(enc.circuit));
  qcloak::write_file_atomic(key_path, qcloak::key_to_json(enc.key));
  std::clog << "encode: wrote " << out << " and " << key_path << "\n";
  emit(Json{{"num_qubits", src.num_qubits()},
            {"num_blocks", enc.num_blocks},
            {"original", counts_json(qcloak::gate_counts(src))},
            {"baseline", counts_json(qcloak::gate_counts(baseline))},
            {"encoded", counts_json(qcloak::gate_counts(enc.circuit))},
            {"baseline_depth", qcloak::cx_depth(baseline)},
            {"encoded_depth", qcloak::cx_depth(enc.circuit)},
            {"netlsd", qcloak::netlsd_divergence(baseline, enc.circuit, opt.cfg.grid)},
            {"encode_seconds", enc.seconds}});
  return 0;
}

int cmd_decode(const std::string& dist_path, const std::string& key_path,
               const std::string& out) {
  qcloak::Distribution dist = qcloak::distribution_from_json(qcloak::read_text_file(dist_path));
  qcloak::ObfuscationKey key = qcloak::key_from_json(qcloak::read_text_file(key_path));
  qcloak::Distribution decoded = qcloak::decode(dist, key);
  qcloak::write_file_atomic(out, qcloak::distribution_to_json(decoded));
  std::clog << "decode: wrote " << out << "\n";
  emit(Json{{"outcomes", decoded.outcomes.size()}});
  return 0;
}

int cmd_simulate(const std::string& in, const std::string& out, const Options& opt) {
  Circuit c = load_circuit(in);
  qcloak::Distribution dist = qcloak::sample(c, opt.cfg.shots, opt.cfg.seed, opt.cfg.sim_cap);
  qcloak::write_file_atomic(out, qcloak::distribution_to_json(dist));
  std::clog << "simulate: wrote " << out << "\n";
  emit(Json{{"shots", opt.cfg.shots}, {"outcomes", dist.outcomes.size()}, {"total", dist.total()}});
  return 0;
}

int cmd_compare(const std::string& in, const std::string& name, const std::string& json_out,
                const std::string& csv_out, const Options& opt) {
  Circuit c = load_circuit(in);
  std::string label = name.empty() ? std::filesystem::path(in).stem().string() : name;
  qcloak::ComparisonReport r = qcloak::compare(c, opt.cfg, label, opt.structural_only);
  std::string json = qcloak::report_to_json(r);
  if (!json_out.empty()) qcloak::write_file_atomic(json_out, json);
  if (!csv_out.empty()) {
    qcloak::write_file_atomic(csv_out, qcloak::report_csv_header() + qcloak::report_to_csv_row(r));
  }
  std::cout << json << "\n";
  return 0;
}

int cmd_qaoa_demo(const std::string& dir, std::size_t iterations, const Options& opt) {
  std::filesystem::create_directories(dir);
  qcloak::MaxCutProblem prob = qcloak::MaxCutProblem::ring(4);
  Json summary = Json::object();
  for (qcloak::QaoaMode mode :
       {qcloak::QaoaMode::Baseline, qcloak::QaoaMode::Corrected, qcloak::QaoaMode::Uncorrected}) {
    std::string tag = qcloak::to_string(mode);
    std::clog << "qaoa-demo: " << tag << "\n";
    qcloak::QaoaResult r =
        qcloak::run_qaoa_case_study(prob, mode, iterations, opt.cfg.seed, opt.cfg.shots, opt.cfg);
    std::filesystem::path base = std::filesystem::path(dir) / ("qaoa_" + tag);
    qcloak::write_file_atomic(base.string() + "_loss.csv", qcloak::loss_trace_csv(r));
    qcloak::write_file_atomic(base.string() + "_dist.json",
                              qcloak::distribution_to_json(r.final_distribution));
    summary[tag] = {{"final_loss", r.final_loss}, {"parameters", r.parameters}};
  }
  emit(summary);
  return 0;
}

int cmd_gen(const std::string& family, std::size_t n, std::size_t layers, std::uint64_t seed,
            const std::string& out) {
  Circuit c;
  if (family == "qft") {
    c = qcloak::gen_qft(n);
  } else if (family == "ghz") {
    c = qcloak::gen_ghz(n);
  } else if (family == "w") {
    c = qcloak::gen_wstate(n);
  } else if (family == "adder") {
    c = qcloak::gen_adder(n);
  } else if (family == "random") {
    c = qcloak::gen_random_blocks(n, layers, seed);
  } else if (family == "qaoa-ring") {
    c = qcloak::build_qaoa_circuit(qcloak::MaxCutProblem::ring(n));
  } else {
    throw std::invalid_argument("unknown family '" + family + "'");
  }
  qcloak::write_file_atomic(out, qcloak::serialize_qasm(c));
  emit(Json{{"family", family},
            {"num_qubits", c.num_qubits()},
            {"counts", counts_json(qcloak::gate_counts(c))}});
  return 0;
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"qcloak: circuit obfuscation by block resynthesis"};
  app.require_subcommand(1);
  Options opt;

  std::string in, out, key, dist, name, json_out, csv_out, dir = "qaoa_demo", family;
  std::size_t iterations = 100, n = 4, layers = 4;

  auto* encode = app.add_subcommand("encode", "Obfuscate a circuit and write its key");
  encode->add_option("input", in, "Input QASM")->required();
  encode->add_option("output", out, "Obfuscated QASM")->required();
  encode->add_option("key", key, "Key JSON")->required();
  add_pipeline_flags(*encode, opt);

  auto* decode = app.add_subcommand("decode", "Undo the key on a measured distribution");
  decode->add_option("dist", dist, "Distribution JSON")->required();
  decode->add_option("key", key, "Key JSON")->required();
  decode->add_option("output", out, "Decoded distribution JSON")->required();

  auto* simulate = app.add_subcommand("simulate", "Sample a circuit on the statevector simulator");
  simulate->add_option("input", in, "Input QASM")->required();
  simulate->add_option("output", out, "Counts JSON")->required();
  add_pipeline_flags(*simulate, opt);

  auto* compare = app.add_subcommand("compare", "Baseline vs encoded report");
  compare->add_option("input", in, "Input QASM")->required();
  compare->add_option("--name", name, "Report label (default: input stem)");
  compare->add_option("--json", json_out, "Also write the report JSON here");
  compare->add_option("--csv", csv_out, "Also write a one-row report CSV here");
  compare->add_flag("--structural-only", opt.structural_only, "Skip all simulation");
  add_pipeline_flags(*compare, opt);

  auto* qaoa = app.add_subcommand("qaoa-demo", "Ring-4 MaxCut QAOA in three modes");
  qaoa->add_option("--out-dir", dir, "Output directory")->capture_default_str();
  qaoa->add_option("--iterations", iterations, "Optimizer iterations")->capture_default_str();
  add_pipeline_flags(*qaoa, opt);

  auto* gen = app.add_subcommand("gen", "Write a benchmark circuit");
  gen->add_option("family", family, "qft | ghz | w | adder | random | qaoa-ring")->required();
  gen->add_option("n", n, "Register size")->required()->check(CLI::PositiveNumber);
  gen->add_option("output", out, "Output QASM")->required();
  gen->add_option("--seed", opt.cfg.seed, "Seed for random circuits")->capture_default_str();
  gen->add_option("--layers", layers, "Brickwork layers for random circuits")
      ->check(CLI::PositiveNumber)
      ->capture_default_str();

  CLI11_PARSE(app, argc, argv);

  try {
    if (*encode) return cmd_encode(in, out, key, opt);
    if (*decode) return cmd_decode(dist, key, out);
    if (*simulate) return cmd_simulate(in, out, opt);
    if (*compare) return cmd_compare(in, name, json_out, csv_out, opt);
    if (*qaoa) return cmd_qaoa_demo(dir, iterations, opt);
    if (*gen) return cmd_gen(family, n, layers, opt.cfg.seed, out);
  } catch (const qcloak::IoError& e) {
    std::cerr << "error: " << e.what() << "\n";
    return kExitIo;
  } catch (const std::filesystem::filesystem_error& e) {
    std::cerr << "error: " << e.what() << "\n";
    return kExitIo;
  } catch (const qcloak::SynthesisError& e) {
    std::cerr << "error: " << e.what() << "\n";
    return kExitSynthesis;
  } catch (const std::exception& e) {
    std::cerr << "error: " << e.what() << "\n";
    return kExitFormat;
  }
  return kExitFormat;
}
