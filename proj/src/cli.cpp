// Copyright 2026 The qbitsim Authors
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

#include "qbitsim/cli.hpp"

#include <algorithm>
#include <charconv>
#include <chrono>
#include <cmath>
#include <cstdio>
#include <fstream>
#include <iostream>
#include <iterator>
#include <new>
#include <numbers>
#include <random>
#include <sstream>
#include <vector>

#include <CLI11.hpp>
#include <json.hpp>
#include <omp.h>

#include "qbitsim/circuit.hpp"
#include "qbitsim/errors.hpp"
#include "qbitsim/gates.hpp"
#include "qbitsim/measurement.hpp"
#include "qbitsim/memory.hpp"
#include "qbitsim/random.hpp"

namespace qbitsim::cli {
namespace {

using json = nlohmann::ordered_json;

std::string hex64(std::uint64_t v) {
  char buf[19];
  std::snprintf(buf, sizeof buf, "%016llx", static_cast<unsigned long long>(v));
  return buf;
}

std::string shortest(double v) {
  char buf[64];
  const auto [ptr, ec] = std::to_chars(buf, buf + sizeof buf, v);
  return std::string(buf, ec == std::errc{} ? ptr : buf);
}

std::string display_label(const std::string& label) { return label.empty() ? "(none)" : label; }

std::string pad(std::string s, std::size_t width) {
  if (s.size() < width) s.append(width - s.size(), ' ');
  return s;
}

void print_histogram(const Histogram& h, std::uint64_t hash, OutputFormat fmt, std::ostream& out) {
  std::vector<std::pair<std::string, std::uint64_t>> rows(h.counts.begin(), h.counts.end());
  std::stable_sort(rows.begin(), rows.end(),
                   [](const auto& a, const auto& b) { return a.second > b.second; });
  if (fmt == OutputFormat::kRecords) {
    out << json{{"record", "meta"},
                {"seed", h.seed},
                {"shots", h.shots},
                {"circuit_hash", hex64(hash)}}
               .dump()
        << "\n";
    for (const auto& [label, count] : rows) {
      out << json{{"record", "outcome"}, {"outcome", label}, {"count", count}}.dump() << "\n";
    }
    return;
  }
  std::size_t width = std::string("outcome").size();
  for (const auto& row : rows) width = std::max(width, display_label(row.first).size());
  out << "# shots " << h.shots << "  seed " << h.seed << "  circuit " << hex64(hash) << "\n";
  out << pad("outcome", width) << "  count\n";
  for (const auto& [label, count] : rows) {
    out << pad(display_label(label), width) << "  " << count << "\n";
  }
}

void print_exact(const std::map<std::string, double>& dist, std::uint64_t hash, OutputFormat fmt,
                 std::ostream& out) {
  std::vector<std::pair<std::string, double>> rows(dist.begin(), dist.end());
  std::stable_sort(rows.begin(), rows.end(),
                   [](const auto& a, const auto& b) { return a.second > b.second; });
  if (fmt == OutputFormat::kRecords) {
    out << json{{"record", "meta"}, {"exact", true}, {"circuit_hash", hex64(hash)}}.dump() << "\n";
    for (const auto& [label, p] : rows) {
      out << json{{"record", "outcome"}, {"outcome", label}, {"probability", p}}.dump() << "\n";
    }
    return;
  }
  std::size_t width = std::string("outcome").size();
  for (const auto& row : rows) width = std::max(width, display_label(row.first).size());
  out << "# exact distribution  circuit " << hex64(hash) << "\n";
  out << pad("outcome", width) << "  probability\n";
  for (const auto& [label, p] : rows) {
    out << pad(display_label(label), width) << "  " << shortest(p) << "\n";
  }
}

Matrix2 random_unitary(RandomSource& rng) {
  const double two_pi = 2.0 * std::numbers::pi;
  const double theta = rng.uniform() * std::numbers::pi / 2;
  const double alpha = rng.uniform() * two_pi;
  const double beta = rng.uniform() * two_pi;
  const double gamma = rng.uniform() * two_pi;
  const Complex g = std::polar(1.0, alpha);
  const double c = std::cos(theta);
  const double s = std::sin(theta);
  return {g * std::polar(c, beta), g * std::polar(s, gamma), -g * std::polar(s, -gamma),
          g * std::polar(c, -beta)};
}

double frequency_of_zero(std::uint64_t shots, std::uint64_t master,
                         StateVector (*prepare)(RandomSource&), bool hadamard) {
  const Gate1 h = named_gate("H");
  std::uint64_t zeros = 0;
  for (std::uint64_t k = 0; k < shots; ++k) {
    RandomSource rng = RandomSource::for_shot(master, k);
    StateVector s = prepare(rng);
    if (hadamard) apply_1q(s, h, 0);
    if (measure_all(std::move(s), rng).value == 0) ++zeros;
  }
  return static_cast<double>(zeros) / static_cast<double>(shots);
}

StateVector prepare_superposition(RandomSource&) {
  const Complex a{1.0 / std::sqrt(2.0)};
  const std::vector<Complex> amps{a, a};
  return StateVector::from_amplitudes(1, amps);
}

StateVector prepare_mixture(RandomSource& rng) {
  return basis_state({rng.uniform() < 0.5 ? 0U : 1U, 1});
}

}  // namespace

std::optional<std::uint64_t> parse_seed(const std::string& text) {
  std::string_view s = text;
  int base = 10;
  if (s.size() > 2 && s[0] == '0' && (s[1] == 'x' || s[1] == 'X')) {
    s.remove_prefix(2);
    base = 16;
  }
  if (s.empty()) return std::nullopt;
  std::uint64_t v = 0;
  const auto [ptr, ec] = std::from_chars(s.data(), s.data() + s.size(), v, base);
  if (ec != std::errc{} || ptr != s.data() + s.size()) return std::nullopt;
  return v;
}

int cmd_run(const RunConfig& cfg, std::istream& in, std::ostream& out, std::ostream& err) {
  std::string source;
  if (cfg.input_path == "-") {
    source.assign(std::istreambuf_iterator<char>(in), std::istreambuf_iterator<char>());
  } else {
    std::ifstream file(cfg.input_path, std::ios::binary);
    if (!file) {
      err << cfg.input_path << ": cannot open file\n";
      return kExitInputError;
    }
    source.assign(std::istreambuf_iterator<char>(file), std::istreambuf_iterator<char>());
  }
  const dsl::ParseResult parsed = dsl::parse(source);
  if (!parsed.ok()) {
    for (const auto& d : parsed.diagnostics) err << cfg.input_path << ":" << to_string(d) << "\n";
    return kExitInputError;
  }
  const dsl::Circuit& circuit = *parsed.circuit;
  if (cfg.shots && *cfg.shots == 0) {
    err << "--shots must be at least 1\n";
    return kExitInputError;
  }
  try {
    const Program program = dsl::to_program(circuit);
    const std::uint64_t hash = dsl::circuit_hash(circuit);
    if (cfg.exact) {
      const auto dist = exact_distribution(program);
      if (!dist) {
        err << cfg.input_path
            << ": --exact needs every measurement after the last gate; this circuit measures "
               "mid-circuit\n";
        return kExitInputError;
      }
      print_exact(*dist, hash, cfg.format, out);
      return kExitOk;
    }
    std::uint64_t seed = cfg.seed;
    if (cfg.random_seed) {
      std::random_device rd;
      seed = (static_cast<std::uint64_t>(rd()) << 32) ^ rd();
    }
    const Histogram h = run_shots(program, cfg.shots.value_or(circuit.shots), seed, cfg.workers);
    print_histogram(h, hash, cfg.format, out);
  } catch (const std::bad_alloc&) {
    err << "out of memory\n";
    return kExitRuntimeError;
  } catch (const Error& e) {
    err << "runtime error: " << e.what() << "\n";
    return kExitRuntimeError;
  }
  return kExitOk;
}

int cmd_verify(const VerifyConfig& cfg, std::ostream& out, std::ostream& err) {
  const auto suite = builtin_identity_suite(cfg.base);
  std::size_t passed = 0;
  for (const auto& r : suite) passed += r.pass ? 1 : 0;
  if (cfg.format == OutputFormat::kRecords) {
    for (const auto& r : suite) {
      out << json{{"name", r.name},
                  {"anchor", r.anchor},
                  {"max_deviation", r.max_deviation},
                  {"pass", r.pass}}
                 .dump()
          << "\n";
    }
  } else {
    std::size_t width = std::string("identity").size();
    for (const auto& r : suite) width = std::max(width, r.name.size());
    out << pad("identity", width) << "  result  max deviation  formula\n";
    for (const auto& r : suite) {
      char dev[32];
      std::snprintf(dev, sizeof dev, "%.3e", r.max_deviation);
      out << pad(r.name, width) << "  " << (r.pass ? "pass  " : "FAIL  ") << "  " << pad(dev, 13)
          << "  " << r.anchor << "\n";
    }
    out << passed << "/" << suite.size() << " identities hold (tolerance 1e-12)\n";
  }
  if (passed != suite.size()) {
    err << (suite.size() - passed) << " identit" << (suite.size() - passed == 1 ? "y" : "ies")
        << " failed\n";
    return kExitIdentityFailure;
  }
  return kExitOk;
}

DemoReport run_demo(std::uint64_t shots, std::uint64_t seed) {
  DemoReport r;
  r.shots = shots;
  r.superposition_direct = frequency_of_zero(shots, mix64(seed + 1), prepare_superposition, false);
  r.superposition_after_h = frequency_of_zero(shots, mix64(seed + 2), prepare_superposition, true);
  r.mixture_direct = frequency_of_zero(shots, mix64(seed + 3), prepare_mixture, false);
  r.mixture_after_h = frequency_of_zero(shots, mix64(seed + 4), prepare_mixture, true);
  return r;
}

int cmd_demo(const DemoConfig& cfg, std::ostream& out, std::ostream& err) {
  if (cfg.shots == 0) {
    err << "--shots must be at least 1\n";
    return kExitInputError;
  }
  const DemoReport r = run_demo(cfg.shots, cfg.seed);
  if (cfg.format == OutputFormat::kRecords) {
    out << json{{"experiment", "superposition"},
                {"shots", r.shots},
                {"p0_direct", r.superposition_direct},
                {"p0_after_h", r.superposition_after_h}}
               .dump()
        << "\n";
    out << json{{"experiment", "mixture"},
                {"shots", r.shots},
                {"p0_direct", r.mixture_direct},
                {"p0_after_h", r.mixture_after_h}}
               .dump()
        << "\n";
    return kExitOk;
  }
  char line[160];
  out << "Superposition versus mixture, " << r.shots << " shots per column, seed " << cfg.seed
      << "\n\n";
  out << "preparation                      P(0) measured   P(0) after H\n";
  std::snprintf(line, sizeof line, "A: (|0> + |1>)/sqrt(2)           %-14.4f  %.4f\n",
                r.superposition_direct, r.superposition_after_h);
  out << line;
  std::snprintf(line, sizeof line, "B: |0> or |1>, fair coin         %-14.4f  %.4f\n",
                r.mixture_direct, r.mixture_after_h);
  out << line;
  out << "\nMeasured directly, A and B are indistinguishable (both near 0.5).\n"
         "After H, A gives 0 every time since H(|0> + |1>)/sqrt(2) = |0>, while B stays near "
         "0.5:\nH|0> and H|1> are both equal-weight superpositions.\n";
  return kExitOk;
}

BenchReport run_bench(const BenchConfig& cfg) {
  using memory::Pool;
  const std::size_t state_base = memory::stats(Pool::kState).current_bytes;
  const std::size_t matrix_base = memory::stats(Pool::kMatrix).current_bytes;
  memory::reset_peak(Pool::kState);
  memory::reset_peak(Pool::kMatrix);

  BenchReport r;
  r.n_qbits = cfg.n_qbits;
  r.gates = cfg.gates;
  r.expected_state_bytes = (std::size_t{1} << cfg.n_qbits) * sizeof(Complex);

  RandomSource rng(cfg.seed);
  std::vector<Gate1> gates;
  std::vector<unsigned> targets;
  gates.reserve(cfg.gates);
  targets.reserve(cfg.gates);
  for (std::uint64_t g = 0; g < cfg.gates; ++g) {
    gates.emplace_back(random_unitary(rng));
    targets.push_back(static_cast<unsigned>(rng.next_u64() % cfg.n_qbits));
  }

  StateVector s = basis_state({0, cfg.n_qbits});
  const auto start = std::chrono::steady_clock::now();
  for (std::uint64_t g = 0; g < cfg.gates; ++g) apply_1q(s, gates[g], targets[g]);
  const auto stop = std::chrono::steady_clock::now();

  r.seconds = std::chrono::duration<double>(stop - start).count();
  const double touched = static_cast<double>(cfg.gates) * static_cast<double>(s.dim());
  r.amplitudes_per_second = r.seconds > 0.0 ? touched / r.seconds : 0.0;
  r.norm_deviation = std::abs(norm_sq(s) - 1.0);
  r.state_peak_bytes = memory::stats(Pool::kState).peak_bytes - state_base;
  r.matrix_peak_bytes = memory::stats(Pool::kMatrix).peak_bytes - matrix_base;
  return r;
}

int cmd_bench(const BenchConfig& cfg, std::ostream& out, std::ostream& err) {
  if (cfg.n_qbits < 1 || cfg.n_qbits > kMaxQbits) {
    err << "--qbits must lie in [1, " << kMaxQbits << "]\n";
    return kExitInputError;
  }
  BenchReport r;
  try {
    r = run_bench(cfg);
  } catch (const std::bad_alloc&) {
    err << "cannot allocate a " << cfg.n_qbits << "-Qbit state ("
        << ((std::size_t{1} << cfg.n_qbits) * sizeof(Complex)) << " bytes)\n";
    return kExitRuntimeError;
  }
  const bool memory_ok = r.state_peak_bytes == r.expected_state_bytes && r.matrix_peak_bytes == 0;
  if (cfg.format == OutputFormat::kRecords) {
    out << json{{"qbits", r.n_qbits},
                {"gates", r.gates},
                {"threads", omp_get_max_threads()},
                {"seconds", r.seconds},
                {"amplitudes_per_second", r.amplitudes_per_second},
                {"state_peak_bytes", r.state_peak_bytes},
                {"expected_state_bytes", r.expected_state_bytes},
                {"matrix_peak_bytes", r.matrix_peak_bytes},
                {"norm_deviation", r.norm_deviation}}
               .dump()
        << "\n";
  } else {
    char line[512];
    std::snprintf(line, sizeof line,
                  "qbits %u  gates %llu  threads %d\n"
                  "wall time            %.6f s\n"
                  "throughput           %.3e amplitudes/s\n"
                  "state peak           %zu bytes (2^%u amplitudes = %zu bytes)\n"
                  "dense matrix peak    %zu bytes\n"
                  "|norm^2 - 1|         %.3e\n",
                  r.n_qbits, static_cast<unsigned long long>(r.gates), omp_get_max_threads(),
                  r.seconds, r.amplitudes_per_second, r.state_peak_bytes, r.n_qbits,
                  r.expected_state_bytes, r.matrix_peak_bytes, r.norm_deviation);
    out << line;
  }
  if (!memory_ok) {
    err << "memory accounting violated: state peak " << r.state_peak_bytes << " bytes, matrix peak "
        << r.matrix_peak_bytes << " bytes\n";
    return kExitRuntimeError;
  }
  return kExitOk;
}

int main_entry(int argc, const char* const* argv, std::istream& in, std::ostream& out,
               std::ostream& err) {
  CLI::App app{"Dense state-vector simulator for n-Qbit circuits", "qbitsim"};
  app.require_subcommand(1);

  const std::map<std::string, OutputFormat> formats{{"text", OutputFormat::kText},
                                                    {"records", OutputFormat::kRecords}};
  auto seed_check = CLI::Validator(
      [](std::string& s) -> std::string {
        return parse_seed(s) ? std::string{} : "seed must be a decimal or 0x-hex 64-bit integer";
      },
      "SEED");

  RunConfig run_cfg;
  std::string run_seed = "0";
  std::uint64_t run_shots = 0;
  auto* run = app.add_subcommand("run", "Run a .qc circuit and print the outcome histogram");
  run->add_option("FILE", run_cfg.input_path, "Circuit file, or - for stdin")->required();
  run->add_option("--shots", run_shots, "Override the circuit's shot count");
  run->add_option("--seed", run_seed, "Master seed (decimal or 0x hex)")->check(seed_check);
  auto* random_flag =
      run->add_flag("--random-seed", run_cfg.random_seed, "Draw the seed from the OS entropy source");
  run->get_option("--seed")->excludes(random_flag);
  run->add_flag("--exact", run_cfg.exact, "Print the exact outcome distribution instead of sampling");
  run->add_option("--format", run_cfg.format, "text or records")
      ->transform(CLI::CheckedTransformer(formats, CLI::ignore_case));
  run->add_option("--threads", run_cfg.workers, "Worker threads for shots (0 = default)")
      ->check(CLI::NonNegativeNumber);

  VerifyConfig verify_cfg;
  auto* verify = app.add_subcommand("verify", "Check the built-in operator identities");
  verify->add_option("--format", verify_cfg.format, "text or records")
      ->transform(CLI::CheckedTransformer(formats, CLI::ignore_case));

  DemoConfig demo_cfg;
  std::string demo_seed = "0";
  auto* demo = app.add_subcommand("demo", "Superposition versus mixture experiment");
  demo->add_option("--shots", demo_cfg.shots, "Shots per experiment")->check(CLI::PositiveNumber);
  demo->add_option("--seed", demo_seed, "Master seed (decimal or 0x hex)")->check(seed_check);
  demo->add_option("--format", demo_cfg.format, "text or records")
      ->transform(CLI::CheckedTransformer(formats, CLI::ignore_case));

  BenchConfig bench_cfg;
  std::string bench_seed = "0";
  int bench_threads = 0;
  auto* bench = app.add_subcommand("bench", "Time random 1-Qbit gates on a 2^n state");
  bench->add_option("--qbits", bench_cfg.n_qbits, "Register size")
      ->required()
      ->check(CLI::Range(1U, kMaxQbits));
  bench->add_option("--gates", bench_cfg.gates, "Number of gates")->required();
  bench->add_option("--seed", bench_seed, "Seed for gate choice")->check(seed_check);
  bench->add_option("--threads", bench_threads, "OpenMP threads (0 = default)")
      ->check(CLI::NonNegativeNumber);
  bench->add_option("--format", bench_cfg.format, "text or records")
      ->transform(CLI::CheckedTransformer(formats, CLI::ignore_case));

  try {
    app.parse(argc, argv);
  } catch (const CLI::ParseError& e) {
    const int code = app.exit(e, out, err);
    return code == 0 ? kExitOk : kExitInputError;
  }

  if (run->parsed()) {
    run_cfg.seed = *parse_seed(run_seed);
    if (run->count("--shots") > 0) run_cfg.shots = run_shots;
    return cmd_run(run_cfg, in, out, err);
  }
  if (verify->parsed()) return cmd_verify(verify_cfg, out, err);
  if (demo->parsed()) {
    demo_cfg.seed = *parse_seed(demo_seed);
    return cmd_demo(demo_cfg, out, err);
  }
  bench_cfg.seed = *parse_seed(bench_seed);
  if (bench_threads > 0) omp_set_num_threads(bench_threads);
  return cmd_bench(bench_cfg, out, err);
}

}  // namespace qbitsim::cli
