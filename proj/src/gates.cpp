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

#include "qbitsim/gates.hpp"

#include <algorithm>
#include <cctype>
#include <string>

#include "qbitsim/errors.hpp"
#include "qbitsim/kernels.hpp"

namespace qbitsim {
namespace {

template <class... Ts>
struct overloaded : Ts... {
  using Ts::operator()...;
};

void check_qbit(const StateVector& s, unsigned q, const char* what) {
  if (q >= s.n_qbits()) {
    throw RangeError(std::string(what) + " index " + std::to_string(q) + " out of range for " +
                     std::to_string(s.n_qbits()) + " Qbits");
  }
}

void check_pair(const StateVector& s, unsigned a, unsigned b) {
  check_qbit(s, a, "Qbit");
  check_qbit(s, b, "Qbit");
  if (a == b) throw ShapeError("2-Qbit gate on a single Qbit " + std::to_string(a));
}

bool use_parallel(const StateVector& s) { return s.n_qbits() >= kernels::kParallelMinQbits; }

}  // namespace

Gate1::Gate1(const Matrix2& m, std::string name) : m_(m), name_(std::move(name)) {
  const double dev = unitarity_deviation(m_);
  if (!(dev <= kUnitarityTol)) {
    throw UnitarityError("gate matrix is not unitary: ||U^dagger U - 1||_max = " +
                         std::to_string(dev));
  }
}

Gate1 named_gate(std::string_view name) {
  std::string key(name);
  std::transform(key.begin(), key.end(), key.begin(),
                 [](unsigned char c) { return static_cast<char>(std::toupper(c)); });
  if (key == "I") return Gate1(matrices::kI, "I");
  if (key == "X") return Gate1(matrices::kX, "X");
  if (key == "Y") return Gate1(matrices::kY, "Y");
  if (key == "Z") return Gate1(matrices::kZ, "Z");
  if (key == "H") return Gate1(matrices::kH, "H");
  if (key == "PAULIY" || key == "PY") return Gate1(matrices::kPauliY, "PauliY");
  throw LookupError("unknown gate '" + std::string(name) + "'");
}

void check_application(const GateApplication& g, unsigned n_qbits) {
  auto in_range = [n_qbits](unsigned q) {
    if (q >= n_qbits) {
      throw RangeError("Qbit index " + std::to_string(q) + " out of range for " +
                       std::to_string(n_qbits) + " Qbits");
    }
  };
  const auto qbits = acted_qbits(g);
  for (unsigned q : qbits) in_range(q);
  if (qbits.size() == 2 && qbits[0] == qbits[1]) {
    throw ShapeError("2-Qbit gate on a single Qbit " + std::to_string(qbits[0]));
  }
}

void apply_1q(StateVector& s, const Gate1& g, unsigned q) {
  check_qbit(s, q, "target");
  if (use_parallel(s)) {
    kernels::parallel::apply_1q(s.amplitudes(), q, g.matrix());
  } else {
    kernels::serial::apply_1q(s.amplitudes(), q, g.matrix());
  }
}

void apply_cnot(StateVector& s, unsigned control, unsigned target) {
  check_pair(s, control, target);
  if (use_parallel(s)) {
    kernels::parallel::apply_cnot(s.amplitudes(), control, target);
  } else {
    kernels::serial::apply_cnot(s.amplitudes(), control, target);
  }
}

void apply_swap(StateVector& s, unsigned a, unsigned b) {
  check_pair(s, a, b);
  if (use_parallel(s)) {
    kernels::parallel::apply_swap(s.amplitudes(), a, b);
  } else {
    kernels::serial::apply_swap(s.amplitudes(), a, b);
  }
}

void apply_controlled(StateVector& s, const Gate1& g, unsigned control, unsigned target) {
  check_pair(s, control, target);
  if (use_parallel(s)) {
    kernels::parallel::apply_controlled_1q(s.amplitudes(), control, target, g.matrix());
  } else {
    kernels::serial::apply_controlled_1q(s.amplitudes(), control, target, g.matrix());
  }
}

void apply_unitary_dense(StateVector& s, const UnitaryMatrix& u, std::span<const unsigned> qbits) {
  if (qbits.empty() || u.dim() != (std::size_t{1} << qbits.size())) {
    throw ShapeError("unitary of dimension " + std::to_string(u.dim()) + " applied to " +
                     std::to_string(qbits.size()) + " Qbits");
  }
  for (unsigned q : qbits) check_qbit(s, q, "Qbit");
  std::vector<unsigned> sorted(qbits.begin(), qbits.end());
  std::sort(sorted.begin(), sorted.end());
  if (std::adjacent_find(sorted.begin(), sorted.end()) != sorted.end()) {
    throw ShapeError("repeated Qbit index in dense unitary application");
  }
  if (use_parallel(s)) {
    kernels::parallel::apply_dense(s.amplitudes(), qbits, u.matrix());
  } else {
    kernels::serial::apply_dense(s.amplitudes(), qbits, u.matrix());
  }
}

void apply(StateVector& s, const GateApplication& g) {
  std::visit(overloaded{
                 [&](const OneQbitGate& op) { apply_1q(s, op.gate, op.target); },
                 [&](const Cnot& op) { apply_cnot(s, op.control, op.target); },
                 [&](const Swap& op) { apply_swap(s, op.a, op.b); },
                 [&](const ControlledGate& op) {
                   apply_controlled(s, op.gate, op.control, op.target);
                 },
             },
             g);
}

DenseMatrix local_matrix(const GateApplication& g) {
  return std::visit(
      overloaded{
          [](const OneQbitGate& op) { return DenseMatrix::from(op.gate.matrix()); },
          [](const Cnot&) {
            DenseMatrix m(4);
            m(0, 0) = m(1, 1) = m(2, 3) = m(3, 2) = 1.0;
            return m;
          },
          [](const Swap&) {
            DenseMatrix m(4);
            m(0, 0) = m(1, 2) = m(2, 1) = m(3, 3) = 1.0;
            return m;
          },
          [](const ControlledGate& op) {
            DenseMatrix m(4);
            m(0, 0) = m(1, 1) = 1.0;
            const Matrix2& u = op.gate.matrix();
            m(2, 2) = u[0];
            m(2, 3) = u[1];
            m(3, 2) = u[2];
            m(3, 3) = u[3];
            return m;
          },
      },
      g);
}

std::vector<unsigned> acted_qbits(const GateApplication& g) {
  return std::visit(overloaded{
                        [](const OneQbitGate& op) { return std::vector<unsigned>{op.target}; },
                        [](const Cnot& op) { return std::vector<unsigned>{op.control, op.target}; },
                        [](const Swap& op) { return std::vector<unsigned>{op.a, op.b}; },
                        [](const ControlledGate& op) {
                          return std::vector<unsigned>{op.control, op.target};
                        },
                    },
                    g);
}

DenseMatrix embed(const GateApplication& g, unsigned n_qbits) {
  if (n_qbits > kOracleMaxQbits) {
    throw CapacityError("oracle path limited to " + std::to_string(kOracleMaxQbits) + " Qbits");
  }
  check_application(g, n_qbits);
  const DenseMatrix local = local_matrix(g);
  const auto qbits = acted_qbits(g);
  const unsigned k = static_cast<unsigned>(qbits.size());
  std::size_t mask = 0;
  for (unsigned q : qbits) mask |= std::size_t{1} << q;
  auto local_index = [&](std::size_t x) {
    std::size_t j = 0;
    for (unsigned i = 0; i < k; ++i) j = (j << 1) | ((x >> qbits[i]) & 1U);
    return j;
  };
  const std::size_t dim = std::size_t{1} << n_qbits;
  DenseMatrix out(dim);
  for (std::size_t r = 0; r < dim; ++r) {
    for (std::size_t c = 0; c < dim; ++c) {
      if ((r & ~mask) != (c & ~mask)) continue;
      out(r, c) = local(local_index(r), local_index(c));
    }
  }
  return out;
}

UnitaryMatrix circuit_to_matrix(std::span<const GateApplication> gates, unsigned n_qbits) {
  if (n_qbits > kOracleMaxQbits) {
    throw CapacityError("circuit_to_matrix limited to " + std::to_string(kOracleMaxQbits) +
                        " Qbits, got " + std::to_string(n_qbits));
  }
  DenseMatrix total = DenseMatrix::identity(std::size_t{1} << n_qbits);
  for (const auto& g : gates) total = embed(g, n_qbits) * total;
  return UnitaryMatrix(std::move(total));
}

}  // namespace qbitsim
