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
#include <optional>
#include <string>
#include <string_view>
#include <variant>
#include <vector>

#include "qbitsim/matrix.hpp"
#include "qbitsim/measurement.hpp"
#include "qbitsim/state.hpp"

// Line-oriented circuit format (.qc):
//
//   # comment                     anywhere after '#'
//   qbits N                       required, first statement, 1 <= N <= 30
//   init X                        basis index, decimal or 0b..., default 0
//   shots N                       default 1024
//   i|x|y|z|h|py q                1-Qbit gates (y = XZ, py = iY)
//   cnot c t | swap a b           2-Qbit gates
//   u q  re00 im00 ... re11 im11  custom 2x2, row-major
//   cu c t  re00 im00 ... im11    controlled custom 2x2
//   measure q1 [q2 ...]           q1 is the most significant outcome bit
//
// Mnemonics are case-insensitive; blank lines are ignored; LF and CRLF line
// endings are accepted.
namespace qbitsim::dsl {

inline constexpr std::uint64_t kDefaultShots = 1024;

enum class Mnemonic { kI, kX, kY, kZ, kH, kPauliY, kCnot, kSwap, kCu, kU };

std::string_view to_string(Mnemonic m) noexcept;

/// Where a statement came from; columns are 1-based byte offsets. Locations
/// are bookkeeping for diagnostics and do not take part in comparisons.
struct SourceLoc {
  int line = 0;
  int column = 0;
  std::vector<int> operand_columns;
};

struct GateStatement {
  Mnemonic op = Mnemonic::kI;
  std::vector<unsigned> qbits;
  /// Present for `u` and `cu` only.
  std::optional<Matrix2> matrix;
  SourceLoc loc;

  friend bool operator==(const GateStatement& a, const GateStatement& b) {
    return a.op == b.op && a.qbits == b.qbits && a.matrix == b.matrix;
  }
};

struct MeasureStatement {
  std::vector<unsigned> qbits;
  SourceLoc loc;

  friend bool operator==(const MeasureStatement& a, const MeasureStatement& b) {
    return a.qbits == b.qbits;
  }
};

using Statement = std::variant<GateStatement, MeasureStatement>;

struct Circuit {
  unsigned n_qbits = 1;
  /// Initial basis index; must be < 2^n_qbits.
  std::uint64_t init = 0;
  std::vector<Statement> statements;
  std::uint64_t shots = kDefaultShots;

  BasisIndex init_index() const { return {init, n_qbits}; }

  bool operator==(const Circuit&) const = default;
};

enum class Severity { kError, kWarning };

struct Diagnostic {
  int line = 0;
  int column = 0;
  std::string message;
  Severity severity = Severity::kError;
};

/// "line:column: error: message"
std::string to_string(const Diagnostic& d);

struct ParseResult {
  /// Empty whenever any error diagnostic was produced.
  std::optional<Circuit> circuit;
  std::vector<Diagnostic> diagnostics;

  bool ok() const noexcept { return circuit.has_value(); }
};

/// Parses and validates `source`, collecting every diagnostic in one pass.
ParseResult parse(std::string_view source);

/// Cross-statement checks: index ranges, distinct operands, unitarity of
/// custom matrices (kUnitarityTol), distinct measured Qbits per statement.
std::vector<Diagnostic> validate(const Circuit& c);

/// Canonical text: lowercase mnemonics, single spaces, directives first
/// (qbits, init, shots), no comments, trailing newline. Numbers use the
/// shortest round-trip representation, so parse(format(c)) == c.
std::string format(const Circuit& c);

/// FNV-1a 64 of format(c).
std::uint64_t circuit_hash(const Circuit& c);

/// Executable form. Throws Error when validate(c) reports anything.
Program to_program(const Circuit& c);

}  // namespace qbitsim::dsl
