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

#include "qbitsim/kernels.hpp"

#include <algorithm>
#include <bit>
#include <utility>
#include <vector>

namespace qbitsim::kernels {
namespace {

// std::complex multiplication goes through the Annex G NaN/inf recovery path;
// gate matrices are finite so the plain formula is used.
inline Complex cmul(const Complex& a, const Complex& b) noexcept {
  return {a.real() * b.real() - a.imag() * b.imag(), a.real() * b.imag() + a.imag() * b.real()};
}

inline void mix_pair(Complex* amps, std::uint64_t i0, std::uint64_t i1, const Matrix2& m) noexcept {
  const Complex a0 = amps[i0];
  const Complex a1 = amps[i1];
  amps[i0] = cmul(m[0], a0) + cmul(m[1], a1);
  amps[i1] = cmul(m[2], a0) + cmul(m[3], a1);
}

std::int64_t count_pairs(std::span<Complex> amps) {
  return static_cast<std::int64_t>(amps.size() >> 1);
}

std::int64_t count_quads(std::span<Complex> amps) {
  return static_cast<std::int64_t>(amps.size() >> 2);
}

// Offsets of the 2^k basis states of the acted-on block, relative to a base
// index whose acted-on bits are zero. Local index j has qbits[0] as its MSB.
std::vector<std::uint64_t> block_offsets(std::span<const unsigned> qbits) {
  const unsigned k = static_cast<unsigned>(qbits.size());
  std::vector<std::uint64_t> offsets(std::size_t{1} << k, 0);
  for (std::size_t j = 0; j < offsets.size(); ++j) {
    std::uint64_t off = 0;
    for (unsigned i = 0; i < k; ++i) {
      if ((j >> (k - 1 - i)) & 1U) off |= std::uint64_t{1} << qbits[i];
    }
    offsets[j] = off;
  }
  return offsets;
}

std::uint64_t insert_zero_bits_sorted(std::uint64_t g, std::span<const unsigned> sorted) {
  for (unsigned bit : sorted) g = insert_zero_bit(g, bit);
  return g;
}

void dense_block(Complex* amps, std::uint64_t base, std::span<const std::uint64_t> offsets,
                 const DenseMatrix& u, std::vector<Complex>& scratch) {
  const std::size_t d = offsets.size();
  for (std::size_t j = 0; j < d; ++j) scratch[j] = amps[base | offsets[j]];
  for (std::size_t r = 0; r < d; ++r) {
    Complex acc{0.0};
    for (std::size_t c = 0; c < d; ++c) acc += cmul(u(r, c), scratch[c]);
    amps[base | offsets[r]] = acc;
  }
}

}  // namespace

namespace serial {

void apply_1q(std::span<Complex> amps, unsigned q, const Matrix2& m) {
  Complex* a = amps.data();
  const std::uint64_t stride = std::uint64_t{1} << q;
  const std::int64_t pairs = count_pairs(amps);
  for (std::int64_t k = 0; k < pairs; ++k) {
    const std::uint64_t i0 = insert_zero_bit(static_cast<std::uint64_t>(k), q);
    mix_pair(a, i0, i0 | stride, m);
  }
}

void apply_controlled_1q(std::span<Complex> amps, unsigned control, unsigned target,
                         const Matrix2& m) {
  Complex* a = amps.data();
  const auto [lo, hi] = std::minmax(control, target);
  const std::uint64_t cbit = std::uint64_t{1} << control;
  const std::uint64_t tbit = std::uint64_t{1} << target;
  const std::int64_t quads = count_quads(amps);
  for (std::int64_t k = 0; k < quads; ++k) {
    const std::uint64_t i0 = insert_zero_bits(static_cast<std::uint64_t>(k), lo, hi) | cbit;
    mix_pair(a, i0, i0 | tbit, m);
  }
}

void apply_cnot(std::span<Complex> amps, unsigned control, unsigned target) {
  Complex* a = amps.data();
  const auto [lo, hi] = std::minmax(control, target);
  const std::uint64_t cbit = std::uint64_t{1} << control;
  const std::uint64_t tbit = std::uint64_t{1} << target;
  const std::int64_t quads = count_quads(amps);
  for (std::int64_t k = 0; k < quads; ++k) {
    const std::uint64_t i0 = insert_zero_bits(static_cast<std::uint64_t>(k), lo, hi) | cbit;
    std::swap(a[i0], a[i0 | tbit]);
  }
}

void apply_swap(std::span<Complex> amps, unsigned qa, unsigned qb) {
  Complex* a = amps.data();
  const auto [lo, hi] = std::minmax(qa, qb);
  const std::uint64_t abit = std::uint64_t{1} << qa;
  const std::uint64_t bbit = std::uint64_t{1} << qb;
  const std::int64_t quads = count_quads(amps);
  for (std::int64_t k = 0; k < quads; ++k) {
    const std::uint64_t base = insert_zero_bits(static_cast<std::uint64_t>(k), lo, hi);
    std::swap(a[base | abit], a[base | bbit]);
  }
}

void apply_dense(std::span<Complex> amps, std::span<const unsigned> qbits, const DenseMatrix& u) {
  const auto offsets = block_offsets(qbits);
  std::vector<unsigned> sorted(qbits.begin(), qbits.end());
  std::sort(sorted.begin(), sorted.end());
  std::vector<Complex> scratch(offsets.size());
  const auto groups = static_cast<std::int64_t>(amps.size() >> qbits.size());
  for (std::int64_t g = 0; g < groups; ++g) {
    const std::uint64_t base = insert_zero_bits_sorted(static_cast<std::uint64_t>(g), sorted);
    dense_block(amps.data(), base, offsets, u, scratch);
  }
}

}  // namespace serial

namespace parallel {

void apply_1q(std::span<Complex> amps, unsigned q, const Matrix2& m) {
  Complex* a = amps.data();
  const std::uint64_t stride = std::uint64_t{1} << q;
  const std::int64_t pairs = count_pairs(amps);
#pragma omp parallel for schedule(static)
  for (std::int64_t k = 0; k < pairs; ++k) {
    const std::uint64_t i0 = insert_zero_bit(static_cast<std::uint64_t>(k), q);
    mix_pair(a, i0, i0 | stride, m);
  }
}

void apply_controlled_1q(std::span<Complex> amps, unsigned control, unsigned target,
                         const Matrix2& m) {
  Complex* a = amps.data();
  const auto [lo, hi] = std::minmax(control, target);
  const std::uint64_t cbit = std::uint64_t{1} << control;
  const std::uint64_t tbit = std::uint64_t{1} << target;
  const std::int64_t quads = count_quads(amps);
#pragma omp parallel for schedule(static)
  for (std::int64_t k = 0; k < quads; ++k) {
    const std::uint64_t i0 = insert_zero_bits(static_cast<std::uint64_t>(k), lo, hi) | cbit;
    mix_pair(a, i0, i0 | tbit, m);
  }
}

void apply_cnot(std::span<Complex> amps, unsigned control, unsigned target) {
  Complex* a = amps.data();
  const auto [lo, hi] = std::minmax(control, target);
  const std::uint64_t cbit = std::uint64_t{1} << control;
  const std::uint64_t tbit = std::uint64_t{1} << target;
  const std::int64_t quads = count_quads(amps);
#pragma omp parallel for schedule(static)
  for (std::int64_t k = 0; k < quads; ++k) {
    const std::uint64_t i0 = insert_zero_bits(static_cast<std::uint64_t>(k), lo, hi) | cbit;
    std::swap(a[i0], a[i0 | tbit]);
  }
}

void apply_swap(std::span<Complex> amps, unsigned qa, unsigned qb) {
  Complex* a = amps.data();
  const auto [lo, hi] = std::minmax(qa, qb);
  const std::uint64_t abit = std::uint64_t{1} << qa;
  const std::uint64_t bbit = std::uint64_t{1} << qb;
  const std::int64_t quads = count_quads(amps);
#pragma omp parallel for schedule(static)
  for (std::int64_t k = 0; k < quads; ++k) {
    const std::uint64_t base = insert_zero_bits(static_cast<std::uint64_t>(k), lo, hi);
    std::swap(a[base | abit], a[base | bbit]);
  }
}

void apply_dense(std::span<Complex> amps, std::span<const unsigned> qbits, const DenseMatrix& u) {
  const auto offsets = block_offsets(qbits);
  std::vector<unsigned> sorted(qbits.begin(), qbits.end());
  std::sort(sorted.begin(), sorted.end());
  const auto groups = static_cast<std::int64_t>(amps.size() >> qbits.size());
#pragma omp parallel
  {
    std::vector<Complex> scratch(offsets.size());
#pragma omp for schedule(static)
    for (std::int64_t g = 0; g < groups; ++g) {
      const std::uint64_t base = insert_zero_bits_sorted(static_cast<std::uint64_t>(g), sorted);
      dense_block(amps.data(), base, offsets, u, scratch);
    }
  }
}

}  // namespace parallel
}  // namespace qbitsim::kernels
