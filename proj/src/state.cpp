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

#include "qbitsim/state.hpp"

#include <cmath>

#include "qbitsim/errors.hpp"

namespace qbitsim {
namespace {

void check_width(unsigned n) {
  if (n < 1 || n > kMaxQbits) {
    throw RangeError("Qbit count " + std::to_string(n) + " outside [1, " +
                     std::to_string(kMaxQbits) + "]");
  }
}

AmplitudeBuffer copy_checked(unsigned n, std::span<const Complex> amps) {
  check_width(n);
  if (amps.size() != (std::size_t{1} << n)) {
    throw ShapeError("expected " + std::to_string(std::size_t{1} << n) +
                     " amplitudes, got " + std::to_string(amps.size()));
  }
  return AmplitudeBuffer(amps.begin(), amps.end());
}

}  // namespace

std::string to_bitstring(std::uint64_t value, unsigned width) {
  std::string out(width, '0');
  for (unsigned q = 0; q < width; ++q) {
    if ((value >> q) & 1U) out[width - 1 - q] = '1';
  }
  return out;
}

StateVector::StateVector() : n_qbits_(1), amps_{Complex{1.0}, Complex{0.0}} {}

StateVector StateVector::from_amplitudes(unsigned n_qbits, std::span<const Complex> amps) {
  StateVector s(n_qbits, copy_checked(n_qbits, amps));
  require_normalized(s, "from_amplitudes");
  return s;
}

StateVector StateVector::unnormalized(unsigned n_qbits, std::span<const Complex> amps) {
  return StateVector(n_qbits, copy_checked(n_qbits, amps));
}

StateVector basis_state(BasisIndex x) {
  check_width(x.width);
  const std::size_t dim = std::size_t{1} << x.width;
  if (x.value >= dim) {
    throw RangeError("basis index " + std::to_string(x.value) + " does not fit in " +
                     std::to_string(x.width) + " Qbits");
  }
  AmplitudeBuffer amps(dim, Complex{0.0});
  amps[x.value] = 1.0;
  return StateVector(x.width, std::move(amps));
}

StateVector tensor(const StateVector& a, const StateVector& b) {
  const unsigned n = a.n_qbits() + b.n_qbits();
  check_width(n);
  std::vector<Complex> out(std::size_t{1} << n);
  const std::size_t db = b.dim();
  for (std::size_t xa = 0; xa < a.dim(); ++xa) {
    for (std::size_t xb = 0; xb < db; ++xb) {
      out[xa * db + xb] = a[xa] * b[xb];
    }
  }
  return StateVector::unnormalized(n, out);
}

double norm_sq(const StateVector& s) {
  double total = 0.0;
  for (const Complex& a : s.amplitudes()) total += std::norm(a);
  return total;
}

Complex inner(const StateVector& a, const StateVector& b) {
  if (a.n_qbits() != b.n_qbits()) {
    throw ShapeError("inner product of " + std::to_string(a.n_qbits()) + "- and " +
                     std::to_string(b.n_qbits()) + "-Qbit states");
  }
  Complex total{0.0};
  for (std::size_t x = 0; x < a.dim(); ++x) total += std::conj(a[x]) * b[x];
  return total;
}

void require_normalized(const StateVector& s, const char* context) {
  const double n2 = norm_sq(s);
  if (!(std::abs(n2 - 1.0) <= kNormTol)) {
    throw NormError(std::string(context) + ": state norm^2 = " + std::to_string(n2));
  }
}

bool is_product_2q(const StateVector& s, double tol) {
  if (s.n_qbits() != 2) {
    throw ShapeError("is_product_2q needs a 2-Qbit state, got " +
                     std::to_string(s.n_qbits()));
  }
  return std::abs(s[3] * s[0] - s[2] * s[1]) <= tol;
}

}  // namespace qbitsim
