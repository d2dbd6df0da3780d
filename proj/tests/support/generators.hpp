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

// Random generators shared by the unit tests and the acceptance binary.

#include <algorithm>
#include <numeric>
#include <utility>
#include <vector>

#include "qbitsim/circuit.hpp"
#include "support/oracles.hpp"

namespace qbitsim::testing {

/// Random split of [0, n) into a measured list (random order) and the rest.
inline std::pair<std::vector<unsigned>, std::vector<unsigned>> random_bipartition(
    unsigned n, RandomSource& rng) {
  std::vector<unsigned> all(n);
  std::iota(all.begin(), all.end(), 0U);
  std::shuffle(all.begin(), all.end(), rng);
  const std::size_t k = 1 + rng.next_u64() % (n - 1);
  return {std::vector<unsigned>(all.begin(), all.begin() + static_cast<long>(k)),
          std::vector<unsigned>(all.begin() + static_cast<long>(k), all.end())};
}

/// Places outcome bits onto register positions; qbits[0] takes the top bit.
inline std::uint64_t scatter(std::uint64_t value, const std::vector<unsigned>& qbits) {
  std::uint64_t x = 0;
  for (std::size_t i = 0; i < qbits.size(); ++i) {
    if ((value >> (qbits.size() - 1 - i)) & 1U) x |= std::uint64_t{1} << qbits[i];
  }
  return x;
}

/// Random unitary built from gates touching only `support`.
inline std::vector<GateApplication> random_local_circuit(const std::vector<unsigned>& support,
                                                         RandomSource& rng) {
  std::vector<GateApplication> gates;
  for (int i = 0; i < 8; ++i) {
    const unsigned a = support[rng.next_u64() % support.size()];
    gates.push_back(OneQbitGate{Gate1(random_matrix2(rng)), a});
    if (support.size() >= 2) {
      unsigned b = support[rng.next_u64() % support.size()];
      if (b != a) gates.push_back(Cnot{a, b});
    }
  }
  return gates;
}

inline StateVector run_gates(StateVector s, const std::vector<GateApplication>& gates) {
  for (const auto& g : gates) qbitsim::apply(s, g);
  return s;
}

/// Valid random circuit over the whole grammar: n <= 8, <= 50 statements.
inline dsl::Circuit random_circuit(RandomSource& rng) {
  using dsl::GateStatement;
  using dsl::Mnemonic;
  dsl::Circuit c;
  c.n_qbits = 1 + static_cast<unsigned>(rng.next_u64() % 8);
  c.init = rng.next_u64() % (std::uint64_t{1} << c.n_qbits);
  c.shots = 1 + rng.next_u64() % 100000;
  const auto pick = [&] { return static_cast<unsigned>(rng.next_u64() % c.n_qbits); };
  const std::size_t len = rng.next_u64() % 51;
  for (std::size_t i = 0; i < len; ++i) {
    static constexpr Mnemonic kOne[] = {Mnemonic::kI, Mnemonic::kX, Mnemonic::kY,
                                        Mnemonic::kZ, Mnemonic::kH, Mnemonic::kPauliY};
    auto kind = rng.next_u64() % 10;
    if (c.n_qbits == 1 && kind >= 7 && kind <= 8) kind = 6;
    const unsigned a = pick();
    const unsigned b = c.n_qbits > 1 ? (a + 1 + pick() % (c.n_qbits - 1)) % c.n_qbits : a;
    if (kind < 6) {
      c.statements.push_back(GateStatement{kOne[kind], {a}, std::nullopt, {}});
    } else if (kind == 6) {
      c.statements.push_back(GateStatement{Mnemonic::kU, {a}, random_matrix2(rng), {}});
    } else if (kind == 7) {
      const Mnemonic op = rng.next_u64() % 2 ? Mnemonic::kCnot : Mnemonic::kSwap;
      c.statements.push_back(GateStatement{op, {a, b}, std::nullopt, {}});
    } else if (kind == 8) {
      c.statements.push_back(GateStatement{Mnemonic::kCu, {a, b}, random_matrix2(rng), {}});
    } else {
      std::vector<unsigned> all(c.n_qbits);
      std::iota(all.begin(), all.end(), 0U);
      std::shuffle(all.begin(), all.end(), rng);
      all.resize(1 + rng.next_u64() % c.n_qbits);
      c.statements.push_back(dsl::MeasureStatement{all, {}});
    }
  }
  return c;
}

}  // namespace qbitsim::testing
