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

#include <algorithm>
#include <fstream>
#include <json.hpp>

#include "qbitsim/errors.hpp"
#include "qbitsim/operator_algebra.hpp"
#include "support/oracles.hpp"

using namespace qbitsim;
using Expr = OperatorExpr;

namespace {

Matrix2 letter_matrix(Letter l) {
  switch (l) {
    case Letter::kI: return matrices::kI;
    case Letter::kX: return matrices::kX;
    case Letter::kZ: return matrices::kZ;
    case Letter::kY: return matmul(matrices::kX, matrices::kZ);
  }
  return matrices::kI;
}

constexpr Letter kLetters[] = {Letter::kI, Letter::kX, Letter::kZ, Letter::kY};

}  // namespace

TEST_CASE("Pauli string parsing and printing", "[algebra]") {
  const PauliString p = PauliString::parse("XZ");
  CHECK(p.width() == 2);
  CHECK(p.letter(1) == Letter::kX);
  CHECK(p.letter(0) == Letter::kZ);
  CHECK(p.str() == "+XZ");
  CHECK(PauliString::parse("-iYI").str() == "-iYI");
  CHECK(PauliString::parse("iZ").phase() == Complex(0, 1));
  CHECK(PauliString::single(3, Letter::kY, 2).str() == "+YII");
  CHECK_THROWS_AS(PauliString::parse("XQ"), Error);
  CHECK_THROWS_AS(PauliString::parse(""), Error);
  CHECK_THROWS_AS(PauliString::parse("X") * PauliString::parse("XX"), ShapeError);
}

TEST_CASE("Pauli products with Y = XZ", "[algebra]") {
  CHECK(PauliString::parse("X") * PauliString::parse("Z") == PauliString::parse("Y"));
  CHECK(PauliString::parse("Z") * PauliString::parse("X") == PauliString::parse("-Y"));
  CHECK(PauliString::parse("Y") * PauliString::parse("Y") == PauliString::parse("-I"));
  CHECK(PauliString::parse("X") * PauliString::parse("Y") == PauliString::parse("Z"));
  CHECK(PauliString::parse("Y") * PauliString::parse("X") == PauliString::parse("-Z"));
  CHECK(PauliString::parse("Y") * PauliString::parse("Z") == PauliString::parse("X"));
  CHECK(PauliString::parse("Z") * PauliString::parse("Y") == PauliString::parse("-X"));
  CHECK(PauliString::parse("XZ") * PauliString::parse("ZX") == PauliString::parse("-YY"));
}

TEST_CASE("all 16 letter products match matrix products", "[algebra][oracle]") {
  for (Letter a : kLetters) {
    for (Letter b : kLetters) {
      const PauliString pa = PauliString::single(1, a, 0);
      const PauliString pb = PauliString::single(1, b, 0);
      const DenseMatrix symbolic = to_dense(pa * pb);
      const DenseMatrix numeric = DenseMatrix::from(matmul(letter_matrix(a), letter_matrix(b)));
      INFO(to_char(a) << to_char(b));
      CHECK(max_abs_diff(symbolic, numeric) == 0.0);
    }
  }
}

TEST_CASE("random Pauli string products match dense products", "[algebra][property]") {
  RandomSource rng(8);
  for (int trial = 0; trial < 200; ++trial) {
    const unsigned n = 1 + static_cast<unsigned>(rng.next_u64() % 4);
    PauliString a(n), b(n);
    for (unsigned q = 0; q < n; ++q) {
      a.set_letter(q, kLetters[rng.next_u64() % 4]);
      b.set_letter(q, kLetters[rng.next_u64() % 4]);
    }
    a.multiply_phase(static_cast<unsigned>(rng.next_u64() % 4));
    CHECK(max_abs_diff(to_dense(a * b), to_dense(a) * to_dense(b)) <= 1e-15);
  }
}

TEST_CASE("to_dense on basic expressions", "[algebra]") {
  CHECK(max_abs_diff(to_dense(Expr::letter(1, Letter::kX, 0), 1), DenseMatrix::from(matrices::kX)) ==
        0.0);
  CHECK(max_abs_diff(to_dense(Expr::hadamard(1, 0), 1), DenseMatrix::from(matrices::kH)) == 0.0);
  // Z on Qbit 1 of 2: diag(1, 1, -1, -1).
  const DenseMatrix z1 = to_dense(Expr::letter(2, Letter::kZ, 1), 2);
  for (std::size_t i = 0; i < 4; ++i) CHECK(z1(i, i) == Complex(i < 2 ? 1.0 : -1.0));
  CHECK(max_abs_diff(to_dense(Expr(2), 2), DenseMatrix(4)) == 0.0);
  CHECK(max_abs_diff(to_dense(Expr::cnot(2, 1, 0), 2), embed(Cnot{1, 0}, 2)) == 0.0);
  CHECK(max_abs_diff(to_dense(Expr::swap(3, 2, 0), 3), embed(Swap{2, 0}, 3)) == 0.0);
}

TEST_CASE("verify_identity examples", "[algebra]") {
  const Expr x = Expr::letter(1, Letter::kX, 0);
  const Expr z = Expr::letter(1, Letter::kZ, 0);
  const Expr h = Expr::hadamard(1, 0);
  const auto hxh = verify_identity(h * x * h, z, 1);
  CHECK(hxh.pass);
  CHECK(hxh.max_deviation <= 1e-12);

  const auto wrong = verify_identity(x, z, 1);
  CHECK_FALSE(wrong.pass);
  CHECK(wrong.max_deviation == 1.0);

  const Expr one = Expr::identity(2);
  const Complex half{0.5};
  const auto swap_sum =
      verify_identity(Expr::swap(2, 1, 0),
                      half * (one + Expr::pauli("ZZ") + Expr::pauli("XX") - Expr::pauli("YY")), 2);
  CHECK(swap_sum.pass);
  CHECK(swap_sum.max_deviation == 0.0);
}

TEST_CASE("X/Z exchange", "[algebra]") {
  const Expr y = Expr::letter(1, Letter::kY, 0);
  const auto r = verify_identity(y.exchange_x_z(), Complex{-1.0} * y, 1);
  CHECK(r.pass);
  CHECK_THROWS_AS(Expr::hadamard(1, 0).exchange_x_z(), LookupError);
}

TEST_CASE("the built-in identity suite passes", "[algebra]") {
  const auto suite = builtin_identity_suite();
  REQUIRE(suite.size() == 12);
  for (const auto& r : suite) {
    INFO(r.name << ": " << r.anchor);
    CHECK(r.pass);
    CHECK(r.max_deviation <= kIdentityTol);
  }
}

TEST_CASE("a corrupted X is detected by the suite", "[algebra]") {
  ElementaryMatrices broken;
  broken.x = Matrix2{0, 1, 1, 1e-6};
  const auto suite = builtin_identity_suite(broken);
  const auto failures = std::count_if(suite.begin(), suite.end(), [](const auto& r) { return !r.pass; });
  CHECK(failures >= 1);

  ElementaryMatrices swapped_h;
  swapped_h.h = matrices::kX;
  const auto suite2 = builtin_identity_suite(swapped_h);
  CHECK(std::any_of(suite2.begin(), suite2.end(), [](const auto& r) { return !r.pass; }));
}

TEST_CASE("suite reports match the golden records", "[algebra][golden]") {
  std::ifstream in(QBITSIM_SOURCE_DIR "/tests/golden/verify_records.jsonl");
  REQUIRE(in);
  const auto suite = builtin_identity_suite();
  std::size_t i = 0;
  for (std::string line; std::getline(in, line); ++i) {
    REQUIRE(i < suite.size());
    const auto rec = nlohmann::json::parse(line);
    CHECK(rec.at("name") == suite[i].name);
    CHECK(rec.at("anchor") == suite[i].anchor);
    CHECK(rec.at("pass") == suite[i].pass);
    CHECK(rec.at("max_deviation").get<double>() <= kIdentityTol);
  }
  CHECK(i == suite.size());
}
