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

#include "qbitsim/circuit.hpp"

#include <algorithm>
#include <array>
#include <charconv>
#include <cmath>
#include <cstdio>
#include <system_error>

#include "qbitsim/errors.hpp"
#include "qbitsim/gates.hpp"

namespace qbitsim::dsl {
namespace {

struct Token {
  std::string_view text;
  int column;
};

struct MnemonicInfo {
  std::string_view text;
  Mnemonic op;
  std::size_t n_indices;
  bool has_matrix;
};

constexpr std::array<MnemonicInfo, 10> kMnemonics{{
    {"i", Mnemonic::kI, 1, false},
    {"x", Mnemonic::kX, 1, false},
    {"y", Mnemonic::kY, 1, false},
    {"z", Mnemonic::kZ, 1, false},
    {"h", Mnemonic::kH, 1, false},
    {"py", Mnemonic::kPauliY, 1, false},
    {"cnot", Mnemonic::kCnot, 2, false},
    {"swap", Mnemonic::kSwap, 2, false},
    {"cu", Mnemonic::kCu, 2, true},
    {"u", Mnemonic::kU, 1, true},
}};

const MnemonicInfo& info(Mnemonic m) {
  return *std::find_if(kMnemonics.begin(), kMnemonics.end(),
                       [m](const MnemonicInfo& i) { return i.op == m; });
}

bool is_space(char c) { return c == ' ' || c == '\t' || c == '\r' || c == '\v' || c == '\f'; }

std::vector<Token> tokenize(std::string_view line) {
  std::vector<Token> out;
  std::size_t i = 0;
  while (i < line.size()) {
    while (i < line.size() && is_space(line[i])) ++i;
    if (i >= line.size()) break;
    const std::size_t start = i;
    while (i < line.size() && !is_space(line[i])) ++i;
    out.push_back({line.substr(start, i - start), static_cast<int>(start) + 1});
  }
  return out;
}

std::string lower(std::string_view s) {
  std::string out(s);
  for (char& c : out) {
    if (c >= 'A' && c <= 'Z') c = static_cast<char>(c - 'A' + 'a');
  }
  return out;
}

/// Printable rendering of a token for messages; control and non-ASCII bytes
/// are escaped so diagnostics stay single-line text.
std::string quoted(std::string_view s) {
  std::string out = "'";
  for (unsigned char c : s.substr(0, 32)) {
    if (c >= 0x20 && c < 0x7f) {
      out += static_cast<char>(c);
    } else {
      char buf[8];
      std::snprintf(buf, sizeof buf, "\\x%02x", c);
      out += buf;
    }
  }
  if (s.size() > 32) out += "...";
  return out + "'";
}

std::optional<std::uint64_t> parse_uint(std::string_view s, int base = 10) {
  if (s.empty()) return std::nullopt;
  std::uint64_t v = 0;
  const auto [ptr, ec] = std::from_chars(s.data(), s.data() + s.size(), v, base);
  if (ec != std::errc{} || ptr != s.data() + s.size()) return std::nullopt;
  return v;
}

std::optional<double> parse_real(std::string_view s) {
  if (s.empty()) return std::nullopt;
  double v = 0.0;
  const auto [ptr, ec] = std::from_chars(s.data(), s.data() + s.size(), v);
  if (ec != std::errc{} || ptr != s.data() + s.size() || !std::isfinite(v)) return std::nullopt;
  return v;
}

std::string format_real(double v) {
  char buf[64];
  const auto [ptr, ec] = std::to_chars(buf, buf + sizeof buf, v);
  return std::string(buf, ec == std::errc{} ? ptr : buf);
}

class Parser {
 public:
  explicit Parser(std::string_view source) : source_(source) {}

  ParseResult run() {
    int line_no = 0;
    std::size_t pos = 0;
    while (pos <= source_.size()) {
      std::size_t end = source_.find('\n', pos);
      if (end == std::string_view::npos) end = source_.size();
      std::string_view line = source_.substr(pos, end - pos);
      ++line_no;
      const std::size_t hash = line.find('#');
      if (hash != std::string_view::npos) line = line.substr(0, hash);
      const auto tokens = tokenize(line);
      if (!tokens.empty()) statement(line_no, tokens);
      pos = end + 1;
    }
    if (!seen_qbits_) error(1, 1, "missing 'qbits' directive");

    ParseResult result;
    if (known_width()) {
      for (auto& d : validate(circuit_)) diags_.push_back(std::move(d));
    }
    std::stable_sort(diags_.begin(), diags_.end(), [](const Diagnostic& a, const Diagnostic& b) {
      return a.line != b.line ? a.line < b.line : a.column < b.column;
    });
    result.diagnostics = std::move(diags_);
    const bool has_error =
        std::any_of(result.diagnostics.begin(), result.diagnostics.end(),
                    [](const Diagnostic& d) { return d.severity == Severity::kError; });
    if (!has_error) result.circuit = std::move(circuit_);
    return result;
  }

 private:
  void error(int line, int column, std::string message) {
    diags_.push_back({line, column, std::move(message), Severity::kError});
  }

  void statement(int line, const std::vector<Token>& tokens) {
    const std::string word = lower(tokens[0].text);
    const bool first = !seen_statement_;
    seen_statement_ = true;
    if (word == "qbits") {
      qbits_directive(line, tokens, first);
      return;
    }
    if (first) {
      error(line, tokens[0].column, "expected 'qbits' directive before " + quoted(tokens[0].text));
    }
    if (word == "init") {
      init_directive(line, tokens);
    } else if (word == "shots") {
      shots_directive(line, tokens);
    } else if (word == "measure") {
      measure(line, tokens);
    } else {
      gate(line, word, tokens);
    }
  }

  bool check_arity(int line, const std::vector<Token>& tokens, std::size_t operands) {
    if (tokens.size() - 1 == operands) return true;
    const std::string name = lower(tokens[0].text);
    const std::string msg = "'" + name + "' takes " + std::to_string(operands) + " operand" +
                            (operands == 1 ? "" : "s") + ", got " +
                            std::to_string(tokens.size() - 1);
    const int column = tokens.size() - 1 > operands ? tokens[operands + 1].column : tokens[0].column;
    error(line, column, msg);
    return false;
  }

  void qbits_directive(int line, const std::vector<Token>& tokens, bool first) {
    if (seen_qbits_) {
      error(line, tokens[0].column, "duplicate 'qbits' directive");
      return;
    }
    if (!first) {
      error(line, tokens[0].column, "'qbits' must be the first statement");
      return;
    }
    seen_qbits_ = true;
    if (!check_arity(line, tokens, 1)) {
      circuit_.n_qbits = 0;
      return;
    }
    const auto n = parse_uint(tokens[1].text);
    if (!n) {
      error(line, tokens[1].column, "expected a non-negative integer, got " + quoted(tokens[1].text));
      circuit_.n_qbits = 0;
    } else if (*n < 1 || *n > kMaxQbits) {
      error(line, tokens[1].column,
            "Qbit count " + std::to_string(*n) + " outside [1, " + std::to_string(kMaxQbits) + "]");
      circuit_.n_qbits = 0;
    } else {
      circuit_.n_qbits = static_cast<unsigned>(*n);
    }
  }

  void init_directive(int line, const std::vector<Token>& tokens) {
    if (seen_init_) {
      error(line, tokens[0].column, "duplicate 'init' directive");
      return;
    }
    seen_init_ = true;
    if (!check_arity(line, tokens, 1)) return;
    const Token& t = tokens[1];
    std::optional<std::uint64_t> v;
    if (t.text.size() > 2 && t.text[0] == '0' && (t.text[1] == 'b' || t.text[1] == 'B')) {
      v = parse_uint(t.text.substr(2), 2);
    } else {
      v = parse_uint(t.text);
    }
    if (!v) {
      error(line, t.column, "expected a basis index (decimal or 0b binary), got " + quoted(t.text));
      return;
    }
    if (known_width() && *v >= (std::uint64_t{1} << circuit_.n_qbits)) {
      error(line, t.column,
            "init value " + std::to_string(*v) + " does not fit in " +
                std::to_string(circuit_.n_qbits) + " Qbits");
      return;
    }
    circuit_.init = *v;
  }

  void shots_directive(int line, const std::vector<Token>& tokens) {
    if (seen_shots_) {
      error(line, tokens[0].column, "duplicate 'shots' directive");
      return;
    }
    seen_shots_ = true;
    if (!check_arity(line, tokens, 1)) return;
    const auto v = parse_uint(tokens[1].text);
    if (!v) {
      error(line, tokens[1].column, "expected a non-negative integer, got " + quoted(tokens[1].text));
    } else if (*v == 0) {
      error(line, tokens[1].column, "shot count must be at least 1");
    } else {
      circuit_.shots = *v;
    }
  }

  bool known_width() const { return seen_qbits_ && circuit_.n_qbits > 0; }

  std::optional<unsigned> index(int line, const Token& t) {
    const auto v = parse_uint(t.text);
    if (!v) {
      error(line, t.column, "expected a Qbit index, got " + quoted(t.text));
      return std::nullopt;
    }
    if (known_width() && *v >= circuit_.n_qbits) {
      error(line, t.column,
            "Qbit index " + std::to_string(*v) + " out of range (qbits " +
                std::to_string(circuit_.n_qbits) + ")");
      return std::nullopt;
    }
    if (*v >= kMaxQbits) {
      error(line, t.column, "Qbit index " + std::to_string(*v) + " out of range");
      return std::nullopt;
    }
    return static_cast<unsigned>(*v);
  }

  void measure(int line, const std::vector<Token>& tokens) {
    if (tokens.size() < 2) {
      error(line, tokens[0].column, "'measure' needs at least one Qbit index");
      return;
    }
    MeasureStatement m;
    m.loc.line = line;
    m.loc.column = tokens[0].column;
    bool ok = true;
    for (std::size_t i = 1; i < tokens.size(); ++i) {
      const auto q = index(line, tokens[i]);
      if (!q) {
        ok = false;
        continue;
      }
      m.qbits.push_back(*q);
      m.loc.operand_columns.push_back(tokens[i].column);
    }
    if (ok) circuit_.statements.emplace_back(std::move(m));
  }

  void gate(int line, const std::string& word, const std::vector<Token>& tokens) {
    const auto it = std::find_if(kMnemonics.begin(), kMnemonics.end(),
                                 [&](const MnemonicInfo& i) { return i.text == word; });
    if (it == kMnemonics.end()) {
      error(line, tokens[0].column, "unknown mnemonic " + quoted(tokens[0].text));
      return;
    }
    const std::size_t operands = it->n_indices + (it->has_matrix ? 8 : 0);
    if (!check_arity(line, tokens, operands)) return;

    GateStatement g;
    g.op = it->op;
    g.loc.line = line;
    g.loc.column = tokens[0].column;
    bool ok = true;
    for (std::size_t i = 1; i <= it->n_indices; ++i) {
      const auto q = index(line, tokens[i]);
      if (!q) {
        ok = false;
        continue;
      }
      g.qbits.push_back(*q);
      g.loc.operand_columns.push_back(tokens[i].column);
    }
    if (it->has_matrix) {
      Matrix2 m{};
      for (std::size_t e = 0; e < 4; ++e) {
        const Token& re = tokens[1 + it->n_indices + 2 * e];
        const Token& im = tokens[2 + it->n_indices + 2 * e];
        const auto vr = parse_real(re.text);
        const auto vi = parse_real(im.text);
        if (!vr) error(line, re.column, "expected a finite real number, got " + quoted(re.text));
        if (!vi) error(line, im.column, "expected a finite real number, got " + quoted(im.text));
        if (!vr || !vi) {
          ok = false;
          continue;
        }
        m[e] = Complex{*vr, *vi};
      }
      g.matrix = m;
    }
    if (ok) circuit_.statements.emplace_back(std::move(g));
  }

  std::string_view source_;
  Circuit circuit_;
  std::vector<Diagnostic> diags_;
  bool seen_statement_ = false;
  bool seen_qbits_ = false;
  bool seen_init_ = false;
  bool seen_shots_ = false;
};

template <class... Ts>
struct overloaded : Ts... {
  using Ts::operator()...;
};

int operand_column(const SourceLoc& loc, std::size_t i) {
  return i < loc.operand_columns.size() ? loc.operand_columns[i] : loc.column;
}

void validate_indices(const std::vector<unsigned>& qbits, const SourceLoc& loc, unsigned n,
                      std::vector<Diagnostic>& out) {
  for (std::size_t i = 0; i < qbits.size(); ++i) {
    if (qbits[i] >= n) {
      out.push_back({loc.line, operand_column(loc, i),
                     "Qbit index " + std::to_string(qbits[i]) + " out of range (qbits " +
                         std::to_string(n) + ")",
                     Severity::kError});
    }
  }
}

}  // namespace

std::string_view to_string(Mnemonic m) noexcept { return info(m).text; }

std::string to_string(const Diagnostic& d) {
  return std::to_string(d.line) + ":" + std::to_string(d.column) + ": " +
         (d.severity == Severity::kError ? "error: " : "warning: ") + d.message;
}

ParseResult parse(std::string_view source) { return Parser(source).run(); }

std::vector<Diagnostic> validate(const Circuit& c) {
  std::vector<Diagnostic> out;
  if (c.n_qbits < 1 || c.n_qbits > kMaxQbits) {
    out.push_back({1, 1, "Qbit count " + std::to_string(c.n_qbits) + " outside [1, 30]",
                   Severity::kError});
    return out;
  }
  if (c.init >= (std::uint64_t{1} << c.n_qbits)) {
    out.push_back({1, 1,
                   "init value " + std::to_string(c.init) + " does not fit in " +
                       std::to_string(c.n_qbits) + " Qbits",
                   Severity::kError});
  }
  if (c.shots == 0) out.push_back({1, 1, "shot count must be at least 1", Severity::kError});

  for (const Statement& st : c.statements) {
    std::visit(
        overloaded{
            [&](const GateStatement& g) {
              const MnemonicInfo& mi = info(g.op);
              if (g.qbits.size() != mi.n_indices || g.matrix.has_value() != mi.has_matrix) {
                out.push_back({g.loc.line, g.loc.column,
                               "malformed '" + std::string(mi.text) + "' statement",
                               Severity::kError});
                return;
              }
              validate_indices(g.qbits, g.loc, c.n_qbits, out);
              if (g.qbits.size() == 2 && g.qbits[0] == g.qbits[1]) {
                out.push_back({g.loc.line, operand_column(g.loc, 1),
                               g.op == Mnemonic::kSwap ? "swap of a Qbit with itself"
                                                       : "control equals target",
                               Severity::kError});
              }
              if (g.matrix) {
                const double dev = unitarity_deviation(*g.matrix);
                if (!(dev <= kUnitarityTol)) {
                  char buf[96];
                  std::snprintf(buf, sizeof buf,
                                "matrix is not unitary: ||U^dagger U - 1||_max = %.3g", dev);
                  out.push_back({g.loc.line, g.loc.column, buf, Severity::kError});
                }
              }
            },
            [&](const MeasureStatement& m) {
              if (m.qbits.empty()) {
                out.push_back({m.loc.line, m.loc.column, "'measure' needs at least one Qbit index",
                               Severity::kError});
              }
              validate_indices(m.qbits, m.loc, c.n_qbits, out);
              for (std::size_t i = 1; i < m.qbits.size(); ++i) {
                if (std::find(m.qbits.begin(), m.qbits.begin() + static_cast<long>(i),
                              m.qbits[i]) != m.qbits.begin() + static_cast<long>(i)) {
                  out.push_back({m.loc.line, operand_column(m.loc, i),
                                 "Qbit " + std::to_string(m.qbits[i]) +
                                     " measured twice in one statement",
                                 Severity::kError});
                }
              }
            },
        },
        st);
  }
  return out;
}

std::string format(const Circuit& c) {
  std::string out;
  out += "qbits " + std::to_string(c.n_qbits) + "\n";
  out += "init " + std::to_string(c.init) + "\n";
  out += "shots " + std::to_string(c.shots) + "\n";
  for (const Statement& st : c.statements) {
    std::visit(overloaded{
                   [&](const GateStatement& g) {
                     out += to_string(g.op);
                     for (unsigned q : g.qbits) out += " " + std::to_string(q);
                     if (g.matrix) {
                       for (const Complex& v : *g.matrix) {
                         out += " " + format_real(v.real()) + " " + format_real(v.imag());
                       }
                     }
                   },
                   [&](const MeasureStatement& m) {
                     out += "measure";
                     for (unsigned q : m.qbits) out += " " + std::to_string(q);
                   },
               },
               st);
    out += "\n";
  }
  return out;
}

std::uint64_t circuit_hash(const Circuit& c) {
  std::uint64_t h = 0xcbf29ce484222325ULL;
  for (unsigned char ch : format(c)) {
    h ^= ch;
    h *= 0x100000001b3ULL;
  }
  return h;
}

Program to_program(const Circuit& c) {
  const auto diags = validate(c);
  if (!diags.empty()) throw Error("invalid circuit: " + to_string(diags.front()));
  Program p;
  p.n_qbits = c.n_qbits;
  p.init = c.init;
  for (const Statement& st : c.statements) {
    std::visit(overloaded{
                   [&](const GateStatement& g) {
                     switch (g.op) {
                       case Mnemonic::kI:
                       case Mnemonic::kX:
                       case Mnemonic::kY:
                       case Mnemonic::kZ:
                       case Mnemonic::kH:
                       case Mnemonic::kPauliY:
                         p.instructions.emplace_back(
                             OneQbitGate{named_gate(to_string(g.op)), g.qbits[0]});
                         break;
                       case Mnemonic::kU:
                         p.instructions.emplace_back(OneQbitGate{Gate1(*g.matrix), g.qbits[0]});
                         break;
                       case Mnemonic::kCu:
                         p.instructions.emplace_back(
                             ControlledGate{Gate1(*g.matrix), g.qbits[0], g.qbits[1]});
                         break;
                       case Mnemonic::kCnot:
                         p.instructions.emplace_back(Cnot{g.qbits[0], g.qbits[1]});
                         break;
                       case Mnemonic::kSwap:
                         p.instructions.emplace_back(Swap{g.qbits[0], g.qbits[1]});
                         break;
                     }
                   },
                   [&](const MeasureStatement& m) { p.instructions.emplace_back(Measure{m.qbits}); },
               },
               st);
  }
  return p;
}

}  // namespace qbitsim::dsl
