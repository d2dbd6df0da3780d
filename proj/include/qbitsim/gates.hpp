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

#include <span>
#include <string>
#include <string_view>
#include <variant>

#include "qbitsim/matrix.hpp"
#include "qbitsim/state.hpp"

namespace qbitsim {

/// A checked 2x2 unitary with an optional display name.
class Gate1 {
 public:
  /// Throws UnitarityError when ||U^dagger U - 1||_max > kUnitarityTol.
  explicit Gate1(const Matrix2& m, std::string name = {});

  const Matrix2& matrix() const noexcept { return m_; }
  const std::string& name() const noexcept { return name_; }

  bool operator==(const Gate1&) const = default;

 private:
  Matrix2 m_;
  std::string name_;
};

namespace matrices {
inline constexpr double kInvSqrt2 = 0.70710678118654752440;
inline const Matrix2 kI{Complex{1}, Complex{0}, Complex{0}, Complex{1}};
inline const Matrix2 kX{Complex{0}, Complex{1}, Complex{1}, Complex{0}};
inline const Matrix2 kZ{Complex{1}, Complex{0}, Complex{0}, Complex{-1}};
/// Y = XZ, a real matrix.
inline const Matrix2 kY{Complex{0}, Complex{-1}, Complex{1}, Complex{0}};
/// iY, the Hermitian Pauli matrix sigma_y.
inline const Matrix2 kPauliY{Complex{0}, Complex{0, -1}, Complex{0, 1}, Complex{0}};
inline const Matrix2 kH{Complex{kInvSqrt2}, Complex{kInvSqrt2}, Complex{kInvSqrt2},
                        Complex{-kInvSqrt2}};
}  // namespace matrices

/// One of I, X, Y, Z, H, PauliY (case-insensitive; "PY" is accepted for
/// PauliY). Y is XZ; PauliY is iY. Throws LookupError for anything else.
Gate1 named_gate(std::string_view name);

struct OneQbitGate {
  Gate1 gate;
  unsigned target;
  bool operator==(const OneQbitGate&) const = default;
};

struct Cnot {
  unsigned control;
  unsigned target;
  bool operator==(const Cnot&) const = default;
};

struct Swap {
  unsigned a;
  unsigned b;
  bool operator==(const Swap&) const = default;
};

/// Applies `gate` to `target` on the subspace where `control` is 1.
struct ControlledGate {
  Gate1 gate;
  unsigned control;
  unsigned target;
  bool operator==(const ControlledGate&) const = default;
};

using GateApplication = std::variant<OneQbitGate, Cnot, Swap, ControlledGate>;

/// Throws RangeError if an index is >= n_qbits, ShapeError if the two indices
/// of a 2-Qbit gate coincide.
void check_application(const GateApplication& g, unsigned n_qbits);

void apply_1q(StateVector& s, const Gate1& g, unsigned q);
void apply_cnot(StateVector& s, unsigned control, unsigned target);
void apply_swap(StateVector& s, unsigned a, unsigned b);
void apply_controlled(StateVector& s, const Gate1& g, unsigned control, unsigned target);

/// Applies u to the listed Qbits; qbits[0] is the most significant bit of u's
/// index space. Throws ShapeError when u.dim() != 2^qbits.size() or indices
/// repeat, RangeError for an index outside the register.
void apply_unitary_dense(StateVector& s, const UnitaryMatrix& u, std::span<const unsigned> qbits);

void apply(StateVector& s, const GateApplication& g);

/// The gate's own 2x2 or 4x4 matrix, with the first listed Qbit (control,
/// or `a` for Swap) as the most significant bit.
DenseMatrix local_matrix(const GateApplication& g);

/// Qbits the gate acts on, in local_matrix order.
std::vector<unsigned> acted_qbits(const GateApplication& g);

/// Full 2^n x 2^n matrix of the gate on an n-Qbit register, built entry by
/// entry from local_matrix. Oracle path only (n <= kOracleMaxQbits).
DenseMatrix embed(const GateApplication& g, unsigned n_qbits);

/// Product of the embedded gates for a program listed in execution order
/// (the first statement is the rightmost factor). Throws CapacityError when n
/// exceeds kOracleMaxQbits.
UnitaryMatrix circuit_to_matrix(std::span<const GateApplication> gates, unsigned n_qbits);

}  // namespace qbitsim
