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

#include <cstddef>
#include <cstdint>
#include <span>

#include "qbitsim/matrix.hpp"
#include "qbitsim/state.hpp"

// In-place gate kernels over a 2^n amplitude array. Every kernel walks the
// index pairs (or quadruples) that a gate mixes, generated by inserting zero
// bits at the acted-on positions, so each amplitude is read and written by
// exactly one iteration. The serial versions are the reference; the parallel
// versions split the same iteration space across OpenMP threads and must
// produce bitwise-identical results.
//
// Callers are responsible for argument validation (range, distinctness); the
// kernels assume it.
namespace qbitsim::kernels {

/// Registers below this size always use the serial kernels.
inline constexpr unsigned kParallelMinQbits = 14;

/// k with a zero bit inserted at position `bit`.
constexpr std::uint64_t insert_zero_bit(std::uint64_t k, unsigned bit) noexcept {
  const std::uint64_t low = k & ((std::uint64_t{1} << bit) - 1);
  return ((k >> bit) << (bit + 1)) | low;
}

/// k with zero bits inserted at positions lo < hi.
constexpr std::uint64_t insert_zero_bits(std::uint64_t k, unsigned lo, unsigned hi) noexcept {
  return insert_zero_bit(insert_zero_bit(k, lo), hi);
}

namespace serial {
void apply_1q(std::span<Complex> amps, unsigned q, const Matrix2& m);
void apply_controlled_1q(std::span<Complex> amps, unsigned control, unsigned target,
                         const Matrix2& m);
void apply_cnot(std::span<Complex> amps, unsigned control, unsigned target);
void apply_swap(std::span<Complex> amps, unsigned a, unsigned b);
/// `qbits[0]` is the most significant bit of u's row/column index.
void apply_dense(std::span<Complex> amps, std::span<const unsigned> qbits, const DenseMatrix& u);
}  // namespace serial

namespace parallel {
void apply_1q(std::span<Complex> amps, unsigned q, const Matrix2& m);
void apply_controlled_1q(std::span<Complex> amps, unsigned control, unsigned target,
                         const Matrix2& m);
void apply_cnot(std::span<Complex> amps, unsigned control, unsigned target);
void apply_swap(std::span<Complex> amps, unsigned a, unsigned b);
void apply_dense(std::span<Complex> amps, std::span<const unsigned> qbits, const DenseMatrix& u);
}  // namespace parallel

}  // namespace qbitsim::kernels
