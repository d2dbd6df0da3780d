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

#include <cmath>

#include "qbitsim/errors.hpp"
#include "qbitsim/state.hpp"
#include "support/oracles.hpp"

using namespace qbitsim;
using qbitsim::testing::kron_vectors;
using qbitsim::testing::random_amplitudes;
using qbitsim::testing::random_state;

namespace {

const double kS = 1.0 / std::sqrt(2.0);

testing::Amplitudes amps_of(const StateVector& s) {
  return {s.amplitudes().begin(), s.amplitudes().end()};
}

}  // namespace

TEST_CASE("basis_state places a single unit amplitude", "[state]") {
  const StateVector five = basis_state({5, 3});
  REQUIRE(five.n_qbits() == 3);
  REQUIRE(amps_of(five) == testing::Amplitudes{0, 0, 0, 0, 0, 1, 0, 0});

  REQUIRE(amps_of(basis_state({0, 1})) == testing::Amplitudes{1, 0});

  const StateVector s19 = basis_state({19, 6});
  for (std::size_t x = 0; x < s19.dim(); ++x) CHECK(s19[x] == Complex(x == 19 ? 1.0 : 0.0));
  CHECK(to_bitstring(19, 6) == "010011");
}

TEST_CASE("basis_state rejects out-of-range input", "[state]") {
  CHECK_THROWS_AS(basis_state({8, 3}), RangeError);
  CHECK_THROWS_AS(basis_state({0, 0}), RangeError);
  CHECK_THROWS_AS(basis_state({0, kMaxQbits + 1}), RangeError);
}

TEST_CASE("norm of every basis state is exactly one", "[state]") {
  for (unsigned n = 1; n <= 8; ++n) {
    for (std::uint64_t x = 0; x < (1U << n); ++x) REQUIRE(norm_sq(basis_state({x, n})) == 1.0);
  }
}

TEST_CASE("tensor places its first argument in the high bits", "[state]") {
  const StateVector one = basis_state({1, 1});
  const StateVector zero = basis_state({0, 1});
  CHECK(tensor(tensor(one, zero), one) == basis_state({5, 3}));
  CHECK(tensor(zero, zero) == basis_state({0, 2}));

  const std::vector<Complex> plus{kS, kS};
  const StateVector p = StateVector::from_amplitudes(1, plus);
  const StateVector t = tensor(p, zero);
  // Brute-force Kronecker product of the two 2-vectors.
  const auto expected = kron_vectors({kS, kS}, {1.0, 0.0});
  REQUIRE(expected == testing::Amplitudes{kS, 0.0, kS, 0.0});
  CHECK(amps_of(t) == expected);
}

TEST_CASE("tensor of basis states is a basis state, exhaustively", "[state][property]") {
  for (unsigned m = 1; m <= 5; ++m) {
    for (unsigned n = 1; m + n <= 10 && n <= 5; ++n) {
      for (std::uint64_t x = 0; x < (1U << m); ++x) {
        for (std::uint64_t y = 0; y < (1U << n); ++y) {
          REQUIRE(tensor(basis_state({x, m}), basis_state({y, n})) ==
                  basis_state({(x << n) + y, m + n}));
        }
      }
    }
  }
}

TEST_CASE("tensor norm is multiplicative and matches the Kronecker oracle", "[state][property]") {
  RandomSource rng(11);
  for (int trial = 0; trial < 100; ++trial) {
    const unsigned na = 1 + static_cast<unsigned>(rng.next_u64() % 4);
    const unsigned nb = 1 + static_cast<unsigned>(rng.next_u64() % 4);
    const auto a = random_amplitudes(std::size_t{1} << na, rng);
    const auto b = random_amplitudes(std::size_t{1} << nb, rng);
    const StateVector sa = StateVector::from_amplitudes(na, a);
    const StateVector sb = StateVector::from_amplitudes(nb, b);
    const StateVector t = tensor(sa, sb);
    CHECK(std::abs(norm_sq(t) - norm_sq(sa) * norm_sq(sb)) <= 1e-12);
    CHECK(testing::max_diff(t.amplitudes(), kron_vectors(a, b)) == 0.0);
  }
}

TEST_CASE("norm_sq sums squared moduli", "[state]") {
  CHECK(norm_sq(basis_state({3, 2})) == 1.0);
  const std::vector<Complex> half{kS, kS};
  CHECK(std::abs(norm_sq(StateVector::from_amplitudes(1, half)) - 1.0) <= 1e-15);
  const std::vector<Complex> doubled{1.0, 1.0};
  const StateVector bad = StateVector::unnormalized(1, doubled);
  CHECK(norm_sq(bad) == 2.0);
  CHECK_THROWS_AS(StateVector::from_amplitudes(1, doubled), NormError);
  CHECK_THROWS_AS(require_normalized(bad, "test"), NormError);
}

TEST_CASE("from_amplitudes checks the length", "[state]") {
  const std::vector<Complex> three{1.0, 0.0, 0.0};
  CHECK_THROWS_AS(StateVector::from_amplitudes(2, three), ShapeError);
}

TEST_CASE("inner product", "[state]") {
  CHECK(inner(basis_state({0, 1}), basis_state({1, 1})) == Complex(0.0));
  for (std::uint64_t x = 0; x < 8; ++x) {
    CHECK(inner(basis_state({x, 3}), basis_state({x, 3})) == Complex(1.0));
  }
  const std::vector<Complex> plus{kS, kS};
  // Direct evaluation: conj(1/sqrt2) * 1 + conj(1/sqrt2) * 0.
  CHECK(std::abs(inner(StateVector::from_amplitudes(1, plus), basis_state({0, 1})) - kS) <= 1e-15);
  CHECK_THROWS_AS(inner(basis_state({0, 1}), basis_state({0, 2})), ShapeError);
}

TEST_CASE("2-Qbit product-state criterion", "[state]") {
  const std::vector<Complex> bell{kS, 0.0, 0.0, kS};
  const StateVector phi = StateVector::from_amplitudes(2, bell);
  CHECK_FALSE(is_product_2q(phi));
  // |a3 a0 - a2 a1| = 1/2 for this state.
  CHECK(std::abs(std::abs(phi[3] * phi[0] - phi[2] * phi[1]) - 0.5) <= 1e-15);

  CHECK(is_product_2q(basis_state({2, 2})));

  const std::vector<Complex> plus{kS, kS};
  const std::vector<Complex> minus{kS, -kS};
  CHECK(is_product_2q(tensor(StateVector::from_amplitudes(1, plus),
                             StateVector::from_amplitudes(1, minus))));

  for (const auto& amps : {std::vector<Complex>{kS, 0, 0, -kS}, std::vector<Complex>{0, kS, kS, 0},
                           std::vector<Complex>{0, kS, -kS, 0}}) {
    CHECK_FALSE(is_product_2q(StateVector::from_amplitudes(2, amps)));
  }
  CHECK_THROWS_AS(is_product_2q(basis_state({0, 3})), ShapeError);
}

TEST_CASE("random 1-Qbit tensor products pass the product test", "[state][property]") {
  RandomSource rng(5);
  for (int trial = 0; trial < 200; ++trial) {
    CHECK(is_product_2q(tensor(random_state(1, rng), random_state(1, rng))));
  }
}

TEST_CASE("bit strings print the highest Qbit first", "[state]") {
  CHECK(to_bitstring(5, 3) == "101");
  CHECK(to_bitstring(1, 4) == "0001");
  CHECK(to_bitstring(0, 0).empty());
}
