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

#include <complex>
#include <cstddef>
#include <cstdint>
#include <span>
#include <string>
#include <vector>

#include "qbitsim/memory.hpp"

namespace qbitsim {

using Complex = std::complex<double>;
using AmplitudeBuffer =
    std::vector<Complex, memory::TrackedAllocator<Complex, memory::Pool::kState>>;

/// Tolerance on |norm^2 - 1| enforced wherever a state enters or leaves the API.
inline constexpr double kNormTol = 1e-9;

/// Largest register the dense state vector supports.
inline constexpr unsigned kMaxQbits = 30;

/// A classical basis label |x>_n: an integer together with its bit width.
struct BasisIndex {
  std::uint64_t value = 0;
  unsigned width = 1;

  bool operator==(const BasisIndex&) const = default;
};

/// Bit string of `value` with `width` digits, highest Qbit leftmost.
std::string to_bitstring(std::uint64_t value, unsigned width);

/// Dense n-Qbit state: amplitude x multiplies the basis state |x>_n, and Qbit
/// q is the bit of weight 2^q in x.
class StateVector {
 public:
  /// |0>_1.
  StateVector();

  /// Validates length 2^n and normalization; throws ShapeError / NormError.
  static StateVector from_amplitudes(unsigned n_qbits, std::span<const Complex> amps);

  /// Same as from_amplitudes but skips the norm check. Intended for tests of
  /// the rejection paths.
  static StateVector unnormalized(unsigned n_qbits, std::span<const Complex> amps);

  unsigned n_qbits() const noexcept { return n_qbits_; }
  std::size_t dim() const noexcept { return amps_.size(); }

  std::span<const Complex> amplitudes() const noexcept { return amps_; }
  std::span<Complex> amplitudes() noexcept { return amps_; }

  const Complex& operator[](std::size_t x) const { return amps_[x]; }
  Complex& operator[](std::size_t x) { return amps_[x]; }

  friend bool operator==(const StateVector& a, const StateVector& b) {
    return a.n_qbits_ == b.n_qbits_ && a.amps_ == b.amps_;
  }

 private:
  friend StateVector basis_state(BasisIndex x);
  StateVector(unsigned n_qbits, AmplitudeBuffer amps)
      : n_qbits_(n_qbits), amps_(std::move(amps)) {}

  unsigned n_qbits_;
  AmplitudeBuffer amps_;
};

/// Classical basis state |x.value>_{x.width}. Throws RangeError when the value
/// does not fit in the width or the width is outside [1, kMaxQbits].
StateVector basis_state(BasisIndex x);

/// Tensor product a (x) b. a occupies the high bits: the amplitude at
/// x_a * 2^{n_b} + x_b is a[x_a] * b[x_b].
StateVector tensor(const StateVector& a, const StateVector& b);

double norm_sq(const StateVector& s);

/// <a|b> = sum_x conj(a_x) b_x. Throws ShapeError on differing Qbit counts.
Complex inner(const StateVector& a, const StateVector& b);

/// Throws NormError when |norm_sq(s) - 1| > kNormTol.
void require_normalized(const StateVector& s, const char* context);

/// 2-Qbit product-state test: |a3 a0 - a2 a1| <= tol. A state passing the test
/// factors into two 1-Qbit states; a failing one is entangled.
bool is_product_2q(const StateVector& s, double tol = 1e-12);

}  // namespace qbitsim
