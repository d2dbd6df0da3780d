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

#include <algorithm>
#include <cmath>
#include <utility>

#include "qbitsim/operator_algebra.hpp"

namespace qbitsim {
namespace {

using Expr = OperatorExpr;

struct Check {
  Expr lhs;
  Expr rhs;
};

IdentityReport run_entry(std::string name, std::string anchor, unsigned n,
                         const std::vector<Check>& checks, const ElementaryMatrices& base) {
  IdentityReport report{std::move(name), std::move(anchor), true, 0.0};
  for (const Check& c : checks) {
    const IdentityReport r = verify_identity(c.lhs, c.rhs, n, kIdentityTol, base);
    report.pass = report.pass && r.pass;
    report.max_deviation = std::max(report.max_deviation, r.max_deviation);
  }
  return report;
}

}  // namespace

std::vector<IdentityReport> builtin_identity_suite(const ElementaryMatrices& base) {
  const Complex half{0.5};
  const Complex inv_sqrt2{1.0 / std::sqrt(2.0)};
  const Complex i{0.0, 1.0};

  // 1-Qbit operators.
  const Expr one1 = Expr::identity(1);
  const Expr x = Expr::letter(1, Letter::kX, 0);
  const Expr z = Expr::letter(1, Letter::kZ, 0);
  const Expr h = Expr::hadamard(1, 0);

  // 2-Qbit operators; subscript = Qbit index.
  const Expr one = Expr::identity(2);
  const Expr x0 = Expr::letter(2, Letter::kX, 0);
  const Expr x1 = Expr::letter(2, Letter::kX, 1);
  const Expr z0 = Expr::letter(2, Letter::kZ, 0);
  const Expr z1 = Expr::letter(2, Letter::kZ, 1);
  const Expr y0 = Expr::letter(2, Letter::kY, 0);
  const Expr y1 = Expr::letter(2, Letter::kY, 1);
  const Expr h0 = Expr::hadamard(2, 0);
  const Expr h1 = Expr::hadamard(2, 1);
  const Expr s10 = Expr::swap(2, 1, 0);
  const Expr c10 = Expr::cnot(2, 1, 0);
  const Expr c01 = Expr::cnot(2, 0, 1);

  const Expr same_parity = half * (one + z1 * z0);
  const Expr diff_parity = half * (one - z1 * z0);
  const Expr c10_expanded = half * (one + z1 + x0 - x0 * z1);

  // sigma_y = iY
  const Expr sy0 = i * y0;
  const Expr sy1 = i * y1;
  const Expr sigma_dot_sigma = x1 * x0 + sy1 * sy0 + z1 * z0;

  std::vector<IdentityReport> suite;
  suite.push_back(run_entry("pauli-squares", "X^2 = 1, Z^2 = 1", 1,
                            {{x * x, one1}, {z * z, one1}}, base));
  suite.push_back(run_entry("xz-anticommute", "XZ = -ZX", 1, {{x * z, Complex{-1.0} * (z * x)}},
                            base));
  suite.push_back(
      run_entry("hadamard-matrix", "H = (X + Z)/sqrt(2)", 1, {{h, inv_sqrt2 * (x + z)}}, base));
  suite.push_back(
      run_entry("hadamard-square", "H^2 = 1, HX = ZH", 1, {{h * h, one1}, {h * x, z * h}}, base));
  suite.push_back(run_entry("hadamard-conjugation", "HXH = Z, HZH = X", 1,
                            {{h * x * h, z}, {h * z * h, x}}, base));
  suite.push_back(run_entry("swap-projectors", "S10 = (1 + Z1Z0)/2 + X1X0 (1 - Z1Z0)/2", 2,
                            {{s10, same_parity + x1 * x0 * diff_parity}}, base));
  suite.push_back(run_entry("swap-pauli-sum", "S10 = (1 + Z1Z0 + X1X0 - Y1Y0)/2", 2,
                            {{s10, half * (one + z1 * z0 + x1 * x0 - y1 * y0)}}, base));
  suite.push_back(run_entry("cnot-projectors",
                            "C10 = (1 + Z1)/2 + X0 (1 - Z1)/2 = (1 + Z1 + X0 - X0Z1)/2", 2,
                            {{c10, half * (one + z1) + x0 * (half * (one - z1))},
                             {c10, c10_expanded}},
                            base));
  suite.push_back(run_entry("cnot-reversal", "C01 = (H1H0) C10 (H1H0)", 2,
                            {{c01, h1 * h0 * c10 * h1 * h0}}, base));
  suite.push_back(run_entry("cnot-xz-symmetry", "C10 with X <-> Z exchanged = C01", 2,
                            {{c10_expanded.exchange_x_z(), c01}}, base));
  suite.push_back(run_entry("spin-exchange", "1 + sigma1.sigma0 = 2 S10 (sigma_y = iY)", 2,
                            {{one + sigma_dot_sigma, Complex{2.0} * s10}}, base));
  suite.push_back(run_entry("parity-projectors",
                            "P+ P- = 0, P+ + P- = 1, P+^2 = P+, P-^2 = P- (P+- = (1 +- Z1Z0)/2)",
                            2,
                            {{same_parity * diff_parity, Expr(2)},
                             {same_parity + diff_parity, one},
                             {same_parity * same_parity, same_parity},
                             {diff_parity * diff_parity, diff_parity}},
                            base));
  return suite;
}

}  // namespace qbitsim
