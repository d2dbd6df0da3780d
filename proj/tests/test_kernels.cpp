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

#include <catch2/catch_amalgamated.hpp>

#include <omp.h>

#include "qbitsim/kernels.hpp"
#include "support/oracles.hpp"

using namespace qbitsim;
using qbitsim::testing::random_amplitudes;

namespace {

unsigned pick(RandomSource& rng, unsigned bound) {
  return static_cast<unsigned>(rng.next_u64() % bound);
}

std::pair<unsigned, unsigned> distinct_pair(RandomSource& rng, unsigned n) {
  const unsigned a = pick(rng, n);
  unsigned b = pick(rng, n - 1);
  if (b >= a) ++b;
  return {a, b};
}

}  // namespace

TEST_CASE("insert_zero_bit enumerates indices with the bit clear", "[kernels]") {
  for (unsigned bit = 0; bit < 5; ++bit) {
    std::vector<std::uint64_t> got;
    for (std::uint64_t k = 0; k < 16; ++k) got.push_back(kernels::insert_zero_bit(k, bit));
    std::vector<std::uint64_t> expected;
    for (std::uint64_t x = 0; x < 32; ++x) {
      if (((x >> bit) & 1U) == 0) expected.push_back(x);
    }
    CHECK(got == expected);
  }
  CHECK(kernels::insert_zero_bits(0b11, 0, 2) == 0b1010);
}

TEST_CASE("parallel kernels are bitwise identical to the serial reference", "[kernels]") {
  RandomSource rng(2024);
  const int saved = omp_get_max_threads();
  for (int threads : {1, 2, 3, 8}) {
    omp_set_num_threads(threads);
    for (unsigned n : {2U, 5U, 11U, 15U}) {
      const auto start = random_amplitudes(std::size_t{1} << n, rng);
      for (int trial = 0; trial < 6; ++trial) {
        auto serial = start;
        auto parallel = start;
        const Matrix2 m = testing::random_matrix2(rng);
        const auto [a, b] = distinct_pair(rng, n);
        switch (trial) {
          case 0:
            kernels::serial::apply_1q(serial, a, m);
            kernels::parallel::apply_1q(parallel, a, m);
            break;
          case 1:
            kernels::serial::apply_controlled_1q(serial, a, b, m);
            kernels::parallel::apply_controlled_1q(parallel, a, b, m);
            break;
          case 2:
            kernels::serial::apply_cnot(serial, a, b);
            kernels::parallel::apply_cnot(parallel, a, b);
            break;
          case 3:
            kernels::serial::apply_swap(serial, a, b);
            kernels::parallel::apply_swap(parallel, a, b);
            break;
          default: {
            const unsigned k = std::min(n, 1U + static_cast<unsigned>(trial - 4) * 2);
            std::vector<unsigned> qbits;
            for (unsigned q = 0; q < n && qbits.size() < k; ++q) {
              if (rng.next_u64() % 2 == 0 || n - q == k - qbits.size()) qbits.push_back(q);
            }
            std::shuffle(qbits.begin(), qbits.end(), rng);
            const DenseMatrix u = testing::random_unitary(std::size_t{1} << k, rng);
            kernels::serial::apply_dense(serial, qbits, u);
            kernels::parallel::apply_dense(parallel, qbits, u);
            break;
          }
        }
        INFO("threads=" << threads << " n=" << n << " trial=" << trial);
        REQUIRE(serial == parallel);
      }
    }
  }
  omp_set_num_threads(saved);
}

TEST_CASE("1-Qbit kernel matches an explicit Kronecker-chain matrix", "[kernels]") {
  RandomSource rng(8);
  for (unsigned n = 1; n <= 6; ++n) {
    for (unsigned q = 0; q < n; ++q) {
      const auto start = random_amplitudes(std::size_t{1} << n, rng);
      const Matrix2 m = testing::random_matrix2(rng);
      auto got = start;
      kernels::serial::apply_1q(got, q, m);
      const auto expected = testing::matvec(testing::kron_chain_1q(m, q, n), start);
      CHECK(testing::max_diff(got, expected) <= 1e-13);
    }
  }
}

TEST_CASE("dense kernel on one Qbit equals the pair kernel", "[kernels]") {
  RandomSource rng(81);
  const unsigned n = 7;
  for (unsigned q = 0; q < n; ++q) {
    const auto start = random_amplitudes(std::size_t{1} << n, rng);
    const Matrix2 m = testing::random_matrix2(rng);
    auto pair = start;
    auto dense = start;
    kernels::serial::apply_1q(pair, q, m);
    const unsigned qbits[] = {q};
    kernels::serial::apply_dense(dense, qbits, DenseMatrix::from(m));
    CHECK(testing::max_diff(pair, dense) <= 1e-15);
  }
}
