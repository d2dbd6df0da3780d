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

#include "qbitsim/matrix.hpp"

#include <algorithm>
#include <bit>
#include <cmath>
#include <string>

#include "qbitsim/errors.hpp"

namespace qbitsim {

Matrix2 matmul(const Matrix2& a, const Matrix2& b) {
  return {a[0] * b[0] + a[1] * b[2], a[0] * b[1] + a[1] * b[3],
          a[2] * b[0] + a[3] * b[2], a[2] * b[1] + a[3] * b[3]};
}

double unitarity_deviation(const Matrix2& m) {
  // (U^dagger U)_{ij} = sum_k conj(U_ki) U_kj
  double dev = 0.0;
  for (int i = 0; i < 2; ++i) {
    for (int j = 0; j < 2; ++j) {
      Complex acc = std::conj(m[i]) * m[j] + std::conj(m[2 + i]) * m[2 + j];
      if (i == j) acc -= 1.0;
      dev = std::max(dev, std::abs(acc));
    }
  }
  return dev;
}

DenseMatrix::DenseMatrix(std::size_t dim) : dim_(dim) {
  if (dim == 0 || !std::has_single_bit(dim)) {
    throw ShapeError("matrix dimension " + std::to_string(dim) + " is not a power of two");
  }
  if (dim > (std::size_t{1} << kOracleMaxQbits)) {
    throw CapacityError("dense matrix of dimension " + std::to_string(dim) +
                        " exceeds the oracle cap of " + std::to_string(kOracleMaxQbits) +
                        " Qbits");
  }
  data_.assign(dim * dim, Complex{0.0});
}

DenseMatrix DenseMatrix::identity(std::size_t dim) {
  DenseMatrix m(dim);
  for (std::size_t i = 0; i < dim; ++i) m(i, i) = 1.0;
  return m;
}

DenseMatrix DenseMatrix::from_row_major(std::size_t dim, std::span<const Complex> entries) {
  DenseMatrix m(dim);
  if (entries.size() != dim * dim) {
    throw ShapeError("expected " + std::to_string(dim * dim) + " matrix entries, got " +
                     std::to_string(entries.size()));
  }
  std::copy(entries.begin(), entries.end(), m.data_.begin());
  return m;
}

DenseMatrix DenseMatrix::from(const Matrix2& m) { return from_row_major(2, m); }

unsigned DenseMatrix::n_qbits() const noexcept {
  return static_cast<unsigned>(std::countr_zero(dim_));
}

DenseMatrix DenseMatrix::adjoint() const {
  DenseMatrix out(dim_);
  for (std::size_t r = 0; r < dim_; ++r) {
    for (std::size_t c = 0; c < dim_; ++c) out(c, r) = std::conj((*this)(r, c));
  }
  return out;
}

DenseMatrix& DenseMatrix::operator+=(const DenseMatrix& rhs) {
  if (rhs.dim_ != dim_) throw ShapeError("matrix sum of differing dimensions");
  for (std::size_t i = 0; i < data_.size(); ++i) data_[i] += rhs.data_[i];
  return *this;
}

DenseMatrix& DenseMatrix::operator-=(const DenseMatrix& rhs) {
  if (rhs.dim_ != dim_) throw ShapeError("matrix difference of differing dimensions");
  for (std::size_t i = 0; i < data_.size(); ++i) data_[i] -= rhs.data_[i];
  return *this;
}

DenseMatrix& DenseMatrix::operator*=(Complex scale) {
  for (auto& v : data_) v *= scale;
  return *this;
}

DenseMatrix operator*(const DenseMatrix& a, const DenseMatrix& b) {
  if (a.dim_ != b.dim_) throw ShapeError("matrix product of differing dimensions");
  const std::size_t d = a.dim_;
  DenseMatrix out(d);
  // Gate embeddings are sparse; skipping zero entries of the left factor keeps
  // the 10-Qbit oracle tractable without changing the arithmetic.
  for (std::size_t i = 0; i < d; ++i) {
    for (std::size_t k = 0; k < d; ++k) {
      const Complex aik = a(i, k);
      if (aik == Complex{0.0}) continue;
      const Complex* brow = &b.data_[k * d];
      Complex* orow = &out.data_[i * d];
      for (std::size_t j = 0; j < d; ++j) orow[j] += aik * brow[j];
    }
  }
  return out;
}

std::vector<Complex> DenseMatrix::apply(std::span<const Complex> v) const {
  if (v.size() != dim_) throw ShapeError("matrix-vector product with wrong vector length");
  std::vector<Complex> out(dim_, Complex{0.0});
  for (std::size_t r = 0; r < dim_; ++r) {
    Complex acc{0.0};
    for (std::size_t c = 0; c < dim_; ++c) acc += (*this)(r, c) * v[c];
    out[r] = acc;
  }
  return out;
}

double max_abs_diff(const DenseMatrix& a, const DenseMatrix& b) {
  if (a.dim() != b.dim()) throw ShapeError("comparing matrices of differing dimensions");
  double dev = 0.0;
  for (std::size_t r = 0; r < a.dim(); ++r) {
    for (std::size_t c = 0; c < a.dim(); ++c) dev = std::max(dev, std::abs(a(r, c) - b(r, c)));
  }
  return dev;
}

double unitarity_deviation(const DenseMatrix& m) {
  return max_abs_diff(m.adjoint() * m, DenseMatrix::identity(m.dim()));
}

DenseMatrix kron(const DenseMatrix& a, const DenseMatrix& b) {
  const std::size_t db = b.dim();
  DenseMatrix out(a.dim() * db);
  for (std::size_t ra = 0; ra < a.dim(); ++ra) {
    for (std::size_t ca = 0; ca < a.dim(); ++ca) {
      const Complex s = a(ra, ca);
      if (s == Complex{0.0}) continue;
      for (std::size_t rb = 0; rb < db; ++rb) {
        for (std::size_t cb = 0; cb < db; ++cb) out(ra * db + rb, ca * db + cb) = s * b(rb, cb);
      }
    }
  }
  return out;
}

UnitaryMatrix::UnitaryMatrix(DenseMatrix m, double tol) : m_(std::move(m)) {
  const double dev = unitarity_deviation(m_);
  if (!(dev <= tol)) {
    throw UnitarityError("matrix is not unitary: ||U^dagger U - 1||_max = " +
                         std::to_string(dev));
  }
}

}  // namespace qbitsim
