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

#pragma once

#include <cstdint>
#include <iosfwd>
#include <optional>
#include <string>

#include "qbitsim/operator_algebra.hpp"

// Command-line front end. Each subcommand writes results to `out` and
// diagnostics to `err` and returns the process exit code, so tests can drive
// it without spawning processes.
namespace qbitsim::cli {

enum ExitCode : int {
  kExitOk = 0,
  kExitInputError = 1,
  kExitRuntimeError = 2,
  kExitIdentityFailure = 3,
};

enum class OutputFormat { kText, kRecords };

/// Accepts decimal or 0x-prefixed hexadecimal.
std::optional<std::uint64_t> parse_seed(const std::string& text);

struct RunConfig {
  /// Path of the .qc file; "-" reads from the input stream.
  std::string input_path = "-";
  std::optional<std::uint64_t> shots;
  std::uint64_t seed = 0;
  bool random_seed = false;
  bool exact = false;
  OutputFormat format = OutputFormat::kText;
  /// Shot-level worker threads; 0 uses the OpenMP default.
  int workers = 0;
};

int cmd_run(const RunConfig& cfg, std::istream& in, std::ostream& out, std::ostream& err);

struct VerifyConfig {
  OutputFormat format = OutputFormat::kText;
  ElementaryMatrices base;
};

int cmd_verify(const VerifyConfig& cfg, std::ostream& out, std::ostream& err);

struct DemoConfig {
  std::uint64_t shots = 10000;
  std::uint64_t seed = 0;
  OutputFormat format = OutputFormat::kText;
};

/// Frequencies of outcome 0 for a Qbit prepared in (|0> + |1>)/sqrt(2)
/// ("superposition") and for a Qbit prepared in |0> or |1> by a fair coin
/// ("mixture"), measured directly and after a Hadamard.
struct DemoReport {
  std::uint64_t shots = 0;
  double superposition_direct = 0.0;
  double superposition_after_h = 0.0;
  double mixture_direct = 0.0;
  double mixture_after_h = 0.0;
};

DemoReport run_demo(std::uint64_t shots, std::uint64_t seed);

int cmd_demo(const DemoConfig& cfg, std::ostream& out, std::ostream& err);

struct BenchConfig {
  unsigned n_qbits = 20;
  std::uint64_t gates = 100;
  std::uint64_t seed = 0;
  OutputFormat format = OutputFormat::kText;
};

struct BenchReport {
  unsigned n_qbits = 0;
  std::uint64_t gates = 0;
  double seconds = 0.0;
  double amplitudes_per_second = 0.0;
  /// Bytes the state vector needs: 16 * 2^n.
  std::size_t expected_state_bytes = 0;
  /// Peak growth of the state and matrix pools during the run.
  std::size_t state_peak_bytes = 0;
  std::size_t matrix_peak_bytes = 0;
  double norm_deviation = 0.0;
};

/// Allocates one 2^n state and applies `gates` random 1-Qbit unitaries at
/// random positions. Throws std::bad_alloc when the state does not fit.
BenchReport run_bench(const BenchConfig& cfg);

int cmd_bench(const BenchConfig& cfg, std::ostream& out, std::ostream& err);

/// Full argument parsing and dispatch (argv[0] is the program name).
int main_entry(int argc, const char* const* argv, std::istream& in, std::ostream& out,
               std::ostream& err);

}  // namespace qbitsim::cli
