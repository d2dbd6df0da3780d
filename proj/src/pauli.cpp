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

#include "qbitsim/operator_algebra.hpp"

#include <algorithm>
#include <string>

#include "qbitsim/errors.hpp"

namespace qbitsim {
namespace {

template <class... Ts>
struct overloaded : Ts... {
  using Ts::operator()...;
};

unsigned x_bit(Letter l) { return static_cast<unsigned>(l) & 1U; }
unsigned z_bit(Letter l) { return (static_cast<unsigned>(l) >> 1) & 1U; }
Letter from_bits(unsigned x, unsigned z) { return static_cast<Letter>((x & 1U) | ((z & 1U) << 1)); }

void check_width_match(unsigned a, unsigned b) {
  if (a != b) {
    throw ShapeError("operator widths differ: " + std::to_string(a) + " vs " + std::to_string(b));
  }
}

void check_index(unsigned width, unsigned q) {
  if (q >= width) {
    throw RangeError("Qbit index " + std::to_string(q) + " out of range for width " +
                     std::to_string(width));
  }
}

Matrix2 letter_matrix(Letter l, const ElementaryMatrices& base) {
  switch (l) {
    case Letter::kI:
      return matrices::kI;
    case Letter::kX:
      return base.x;
    case Letter::kZ:
      return base.z;
    case Letter::kY:
      return matmul(base.x, base.z);
  }
  return matrices::kI;
}

DenseMatrix embed_single(const Matrix2& m, unsigned q, unsigned n) {
  const std::size_t dim = std::size_t{1} << n;
  const std::size_t bit = std::size_t{1} << q;
  DenseMatrix out(dim);
  for (std::size_t r = 0; r < dim; ++r) {
    for (std::size_t c = 0; c < dim; ++c) {
      if ((r & ~bit) != (c & ~bit)) continue;
      out(r, c) = m[((r >> q) & 1U) * 2 + ((c >> q) & 1U)];
    }
  }
  return out;
}

// Matrix of a basis permutation: column c has a single 1 in row f(c).
template <class F>
DenseMatrix permutation(unsigned n, F f) {
  const std::size_t dim = std::size_t{1} << n;
  DenseMatrix out(dim);
  for (std::size_t c = 0; c < dim; ++c) out(f(c), c) = 1.0;
  return out;
}

DenseMatrix named_gate_matrix(const NamedGate& g, unsigned n, const ElementaryMatrices& base) {
  switch (g.kind) {
    case NamedGate::Kind::kHadamard:
      return embed_single(base.h, g.a, n);
    case NamedGate::Kind::kSwap:
      return permutation(n, [&](std::size_t x) {
        const std::size_t ba = (x >> g.a) & 1U;
        const std::size_t bb = (x >> g.b) & 1U;
        x &= ~((std::size_t{1} << g.a) | (std::size_t{1} << g.b));
        return x | (ba << g.b) | (bb << g.a);
      });
    case NamedGate::Kind::kCnot:
      return permutation(n, [&](std::size_t x) {
        return ((x >> g.a) & 1U) ? x ^ (std::size_t{1} << g.b) : x;
      });
  }
  throw LookupError("unknown named gate");
}

void check_dense_width(unsigned n) {
  if (n > kOracleMaxQbits) {
    throw CapacityError("to_dense limited to " + std::to_string(kOracleMaxQbits) +
                        " Qbits, got " + std::to_string(n));
  }
}

}  // namespace

char to_char(Letter l) noexcept {
  switch (l) {
    case Letter::kI:
      return 'I';
    case Letter::kX:
      return 'X';
    case Letter::kZ:
      return 'Z';
    case Letter::kY:
      return 'Y';
  }
  return '?';
}

PauliString::PauliString(unsigned width) : letters_(width, Letter::kI) {
  if (width == 0) throw ShapeError("Pauli string width must be at least 1");
}

PauliString PauliString::parse(std::string_view text) {
  unsigned power = 0;
  if (text.starts_with("-i")) {
    power = 3;
    text.remove_prefix(2);
  } else if (text.starts_with("+i")) {
    power = 1;
    text.remove_prefix(2);
  } else if (text.starts_with("i")) {
    power = 1;
    text.remove_prefix(1);
  } else if (text.starts_with("-")) {
    power = 2;
    text.remove_prefix(1);
  } else if (text.starts_with("+")) {
    text.remove_prefix(1);
  }
  PauliString p(static_cast<unsigned>(text.size()));
  for (std::size_t i = 0; i < text.size(); ++i) {
    Letter l;
    switch (text[i]) {
      case 'I':
      case '1':
        l = Letter::kI;
        break;
      case 'X':
        l = Letter::kX;
        break;
      case 'Y':
        l = Letter::kY;
        break;
      case 'Z':
        l = Letter::kZ;
        break;
      default:
        throw LookupError("unknown Pauli letter '" + std::string(1, text[i]) + "'");
    }
    p.letters_[text.size() - 1 - i] = l;
  }
  p.phase_ = static_cast<std::uint8_t>(power);
  return p;
}

PauliString PauliString::single(unsigned width, Letter letter, unsigned q) {
  PauliString p(width);
  check_index(width, q);
  p.letters_[q] = letter;
  return p;
}

Complex PauliString::phase() const noexcept {
  switch (phase_) {
    case 0:
      return {1.0, 0.0};
    case 1:
      return {0.0, 1.0};
    case 2:
      return {-1.0, 0.0};
    default:
      return {0.0, -1.0};
  }
}

std::string PauliString::str() const {
  static constexpr const char* kPrefix[] = {"+", "+i", "-", "-i"};
  std::string out = kPrefix[phase_];
  for (auto it = letters_.rbegin(); it != letters_.rend(); ++it) out += to_char(*it);
  return out;
}

PauliString multiply(const PauliString& a, const PauliString& b) {
  check_width_match(a.width(), b.width());
  PauliString out(a.width());
  unsigned power = a.phase_power() + b.phase_power();
  for (unsigned q = 0; q < a.width(); ++q) {
    const Letter la = a.letter(q);
    const Letter lb = b.letter(q);
    // X^a1 Z^a2 X^b1 Z^b2 = (-1)^(a2 b1) X^(a1+b1) Z^(a2+b2)
    if (z_bit(la) & x_bit(lb)) power += 2;
    out.set_letter(q, from_bits(x_bit(la) ^ x_bit(lb), z_bit(la) ^ z_bit(lb)));
  }
  out.multiply_phase(power & 3U);
  return out;
}

OperatorExpr::OperatorExpr(unsigned width) : width_(width) {
  if (width == 0) throw ShapeError("operator width must be at least 1");
}

OperatorExpr OperatorExpr::identity(unsigned width) {
  OperatorExpr e(width);
  e.terms_.push_back(Term{});
  return e;
}

OperatorExpr OperatorExpr::pauli(const PauliString& p) {
  OperatorExpr e(p.width());
  e.terms_.push_back(Term{Complex{1.0}, {p}});
  return e;
}

OperatorExpr OperatorExpr::pauli(std::string_view text) { return pauli(PauliString::parse(text)); }

OperatorExpr OperatorExpr::letter(unsigned width, Letter l, unsigned q) {
  return pauli(PauliString::single(width, l, q));
}

OperatorExpr OperatorExpr::hadamard(unsigned width, unsigned q) {
  check_index(width, q);
  OperatorExpr e(width);
  e.terms_.push_back(Term{Complex{1.0}, {NamedGate{NamedGate::Kind::kHadamard, q, q}}});
  return e;
}

OperatorExpr OperatorExpr::swap(unsigned width, unsigned a, unsigned b) {
  check_index(width, a);
  check_index(width, b);
  if (a == b) throw ShapeError("swap needs two distinct Qbits");
  OperatorExpr e(width);
  e.terms_.push_back(Term{Complex{1.0}, {NamedGate{NamedGate::Kind::kSwap, a, b}}});
  return e;
}

OperatorExpr OperatorExpr::cnot(unsigned width, unsigned control, unsigned target) {
  check_index(width, control);
  check_index(width, target);
  if (control == target) throw ShapeError("cnot needs two distinct Qbits");
  OperatorExpr e(width);
  e.terms_.push_back(Term{Complex{1.0}, {NamedGate{NamedGate::Kind::kCnot, control, target}}});
  return e;
}

OperatorExpr& OperatorExpr::operator+=(const OperatorExpr& rhs) {
  check_width_match(width_, rhs.width_);
  terms_.insert(terms_.end(), rhs.terms_.begin(), rhs.terms_.end());
  return *this;
}

OperatorExpr& OperatorExpr::operator-=(const OperatorExpr& rhs) {
  check_width_match(width_, rhs.width_);
  for (Term t : rhs.terms_) {
    t.coefficient = -t.coefficient;
    terms_.push_back(std::move(t));
  }
  return *this;
}

OperatorExpr& OperatorExpr::operator*=(Complex scale) {
  for (auto& t : terms_) t.coefficient *= scale;
  return *this;
}

OperatorExpr operator*(const OperatorExpr& a, const OperatorExpr& b) {
  check_width_match(a.width_, b.width_);
  OperatorExpr out(a.width_);
  for (const Term& ta : a.terms_) {
    for (const Term& tb : b.terms_) {
      Term t{ta.coefficient * tb.coefficient, ta.factors};
      t.factors.insert(t.factors.end(), tb.factors.begin(), tb.factors.end());
      out.terms_.push_back(std::move(t));
    }
  }
  return out;
}

OperatorExpr OperatorExpr::exchange_x_z() const {
  OperatorExpr out = *this;
  for (Term& t : out.terms_) {
    for (Factor& f : t.factors) {
      auto* p = std::get_if<PauliString>(&f);
      if (p == nullptr) throw LookupError("X/Z exchange is defined only on Pauli factors");
      for (unsigned q = 0; q < p->width(); ++q) {
        const Letter l = p->letter(q);
        // XZ -> ZX = -XZ
        if (l == Letter::kY) p->multiply_phase(2);
        p->set_letter(q, from_bits(z_bit(l), x_bit(l)));
      }
    }
  }
  return out;
}

DenseMatrix to_dense(const PauliString& p, const ElementaryMatrices& base) {
  const unsigned n = p.width();
  check_dense_width(n);
  std::vector<Matrix2> local(n);
  for (unsigned q = 0; q < n; ++q) local[q] = letter_matrix(p.letter(q), base);
  const std::size_t dim = std::size_t{1} << n;
  DenseMatrix out(dim);
  const Complex phase = p.phase();
  for (std::size_t r = 0; r < dim; ++r) {
    for (std::size_t c = 0; c < dim; ++c) {
      Complex v = phase;
      for (unsigned q = 0; q < n && v != Complex{0.0}; ++q) {
        v *= local[q][((r >> q) & 1U) * 2 + ((c >> q) & 1U)];
      }
      out(r, c) = v;
    }
  }
  return out;
}

DenseMatrix to_dense(const OperatorExpr& e, unsigned n, const ElementaryMatrices& base) {
  check_dense_width(n);
  check_width_match(e.width(), n);
  const std::size_t dim = std::size_t{1} << n;
  DenseMatrix total(dim);
  for (const Term& t : e.terms()) {
    DenseMatrix product = DenseMatrix::identity(dim);
    for (const Factor& f : t.factors) {
      product = product * std::visit(overloaded{
                                         [&](const PauliString& p) { return to_dense(p, base); },
                                         [&](const NamedGate& g) {
                                           return named_gate_matrix(g, n, base);
                                         },
                                     },
                                     f);
    }
    total += t.coefficient * std::move(product);
  }
  return total;
}

IdentityReport verify_identity(const OperatorExpr& lhs, const OperatorExpr& rhs, unsigned n,
                               double tol, const ElementaryMatrices& base) {
  check_width_match(lhs.width(), rhs.width());
  IdentityReport report;
  report.max_deviation = max_abs_diff(to_dense(lhs, n, base), to_dense(rhs, n, base));
  report.pass = report.max_deviation <= tol;
  return report;
}

}  // namespace qbitsim
