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
#include <string>
#include <string_view>
#include <variant>
#include <vector>

#include "qbitsim/gates.hpp"
#include "qbitsim/matrix.hpp"

namespace qbitsim {

/// One-Qbit Pauli letter written as X^x Z^z: bit 0 is the X exponent and bit 1
/// the Z exponent. Y is therefore XZ (real), not the Hermitian sigma_y.
enum class Letter : std::uint8_t { kI = 0, kX = 1, kZ = 2, kY = 3 };

char to_char(Letter l) noexcept;

/// phase * L_{n-1} (x) ... (x) L_0, with phase = i^phase_power.
class PauliString {
 public:
  /// Identity of the given width (>= 1).
  explicit PauliString(unsigned width);

  /// Letters written highest Qbit first, optionally prefixed by a phase
  /// ("+", "-", "i", "-i"). "XZ" is X on Qbit 1 and Z on Qbit 0.
  static PauliString parse(std::string_view text);

  /// `letter` on Qbit q, identity elsewhere.
  static PauliString single(unsigned width, Letter letter, unsigned q);

  unsigned width() const noexcept { return static_cast<unsigned>(letters_.size()); }
  Letter letter(unsigned q) const { return letters_.at(q); }
  void set_letter(unsigned q, Letter l) { letters_.at(q) = l; }

  /// Exponent k of the phase i^k, in [0, 4).
  unsigned phase_power() const noexcept { return phase_; }
  Complex phase() const noexcept;
  void multiply_phase(unsigned power) noexcept { phase_ = (phase_ + power) & 3U; }

  std::string str() const;

  bool operator==(const PauliString&) const = default;

 private:
  std::uint8_t phase_ = 0;
  std::vector<Letter> letters_;
};

/// Product a * b with phase tracking, derived from X^2 = Z^2 = 1 and
/// XZ = -ZX. Throws ShapeError on differing widths.
PauliString multiply(const PauliString& a, const PauliString& b);
inline PauliString operator*(const PauliString& a, const PauliString& b) { return multiply(a, b); }

/// A gate kept symbolic inside an operator expression and expanded to its
/// matrix when densified. H acts on `a`; Swap exchanges `a` and `b`; Cnot
/// has control `a` and target `b`.
struct NamedGate {
  enum class Kind { kHadamard, kSwap, kCnot };
  Kind kind;
  unsigned a = 0;
  unsigned b = 0;
  bool operator==(const NamedGate&) const = default;
};

using Factor = std::variant<PauliString, NamedGate>;

/// coefficient * (f_0 f_1 ... f_k); an empty factor list is the identity.
struct Term {
  Complex coefficient{1.0};
  std::vector<Factor> factors;
};

/// Formal sum of terms over a fixed width. Results need not be unitary
/// (projectors and other sums are allowed).
class OperatorExpr {
 public:
  /// The zero operator.
  explicit OperatorExpr(unsigned width);

  static OperatorExpr identity(unsigned width);
  static OperatorExpr pauli(const PauliString& p);
  static OperatorExpr pauli(std::string_view text);
  static OperatorExpr letter(unsigned width, Letter l, unsigned q);
  static OperatorExpr hadamard(unsigned width, unsigned q);
  static OperatorExpr swap(unsigned width, unsigned a, unsigned b);
  static OperatorExpr cnot(unsigned width, unsigned control, unsigned target);

  unsigned width() const noexcept { return width_; }
  const std::vector<Term>& terms() const noexcept { return terms_; }

  OperatorExpr& operator+=(const OperatorExpr& rhs);
  OperatorExpr& operator-=(const OperatorExpr& rhs);
  OperatorExpr& operator*=(Complex scale);

  friend OperatorExpr operator+(OperatorExpr a, const OperatorExpr& b) { return a += b; }
  friend OperatorExpr operator-(OperatorExpr a, const OperatorExpr& b) { return a -= b; }
  friend OperatorExpr operator*(Complex s, OperatorExpr a) { return a *= s; }
  friend OperatorExpr operator*(const OperatorExpr& a, const OperatorExpr& b);

  /// Exchanges the letters X and Z in every Pauli factor. Y = XZ becomes
  /// ZX = -Y. Throws LookupError if the expression contains a named gate.
  OperatorExpr exchange_x_z() const;

 private:
  unsigned width_;
  std::vector<Term> terms_;
};

/// Base matrices used when densifying. Y is always derived as X * Z, so a
/// fault injected into X also reaches every Y.
struct ElementaryMatrices {
  Matrix2 x = matrices::kX;
  Matrix2 z = matrices::kZ;
  Matrix2 h = matrices::kH;
};

/// Dense 2^n x 2^n matrix of the expression. Throws ShapeError when the
/// expression width differs from n and CapacityError when n > kOracleMaxQbits.
DenseMatrix to_dense(const OperatorExpr& e, unsigned n, const ElementaryMatrices& base = {});
DenseMatrix to_dense(const PauliString& p, const ElementaryMatrices& base = {});

inline constexpr double kIdentityTol = 1e-12;

struct IdentityReport {
  std::string name;
  /// The identity as a formula, e.g. "HXH = Z".
  std::string anchor;
  bool pass = false;
  double max_deviation = 0.0;
};

/// pass iff ||to_dense(lhs) - to_dense(rhs)||_max <= tol.
IdentityReport verify_identity(const OperatorExpr& lhs, const OperatorExpr& rhs, unsigned n,
                               double tol = kIdentityTol, const ElementaryMatrices& base = {});

/// The twelve built-in operator identities relating 1, X, Y, Z, H, swap and
/// CNOT, each checked by dense comparison at kIdentityTol.
std::vector<IdentityReport> builtin_identity_suite(const ElementaryMatrices& base = {});

}  // namespace qbitsim
