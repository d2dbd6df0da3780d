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

#include <array>
#include <cstddef>
#include <span>
#include <vector>

#include "qbitsim/memory.hpp"
#include "qbitsim/state.hpp"

namespace qbitsim {

/// Dense matrices are only ever built for at most this many Qbits.
inline constexpr unsigned kOracleMaxQbits = 10;

/// Tolerance for ||U^dagger U - 1||_max.
inline constexpr double kUnitarityTol = 1e-10;

/// Row-major 2x2 complex matrix: {m00, m01, m10, m11}.
using Matrix2 = std::array<Complex, 4>;

Matrix2 matmul(const Matrix2& a, const Matrix2& b);
double unitarity_deviation(const Matrix2& m);

/// Square complex matrix of power-of-two dimension, row-major, capped at
/// 2^kOracleMaxQbits rows.
class DenseMatrix {
 public:
  /// Zero matrix. Throws ShapeError for a non power of two and CapacityError
  /// above the oracle cap.
  explicit DenseMatrix(std::size_t dim);

  static DenseMatrix identity(std::size_t dim);
  static DenseMatrix from_row_major(std::size_t dim, std::span<const Complex> entries);
  static DenseMatrix from(const Matrix2& m);

  std::size_t dim() const noexcept { return dim_; }
  unsigned n_qbits() const noexcept;

  Complex& operator()(std::size_t r, std::size_t c) { return data_[r * dim_ + c]; }
  const Complex& operator()(std::size_t r, std::size_t c) const { return data_[r * dim_ + c]; }

  DenseMatrix adjoint() const;

  DenseMatrix& operator+=(const DenseMatrix& rhs);
  DenseMatrix& operator-=(const DenseMatrix& rhs);
  DenseMatrix& operator*=(Complex scale);

  friend DenseMatrix operator+(DenseMatrix a, const DenseMatrix& b) { return a += b; }
  friend DenseMatrix operator-(DenseMatrix a, const DenseMatrix& b) { return a -= b; }
  friend DenseMatrix operator*(Complex s, DenseMatrix a) { return a *= s; }
  friend DenseMatrix operator*(const DenseMatrix& a, const DenseMatrix& b);

  /// Matrix-vector product; the vector length must equal dim().
  std::vector<Complex> apply(std::span<const Complex> v) const;

 private:
  std::size_t dim_;
  std::vector<Complex, memory::TrackedAllocator<Complex, memory::Pool::kMatrix>> data_;
};

/// Largest entrywise modulus of a - b. Throws ShapeError on differing dims.
double max_abs_diff(const DenseMatrix& a, const DenseMatrix& b);

double unitarity_deviation(const DenseMatrix& m);

/// Kronecker product; a acts on the high bits of the result.
DenseMatrix kron(const DenseMatrix& a, const DenseMatrix& b);

/// A DenseMatrix whose unitarity was checked once, at construction.
class UnitaryMatrix {
 public:
  /// Throws UnitarityError when the deviation exceeds `tol`.
  explicit UnitaryMatrix(DenseMatrix m, double tol = kUnitarityTol);

  const DenseMatrix& matrix() const noexcept { return m_; }
  std::size_t dim() const noexcept { return m_.dim(); }
  unsigned n_qbits() const noexcept { return m_.n_qbits(); }

 private:
  DenseMatrix m_;
};

}  // namespace qbitsim
