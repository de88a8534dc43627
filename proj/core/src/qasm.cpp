// Copyright 2026 The qcloak Authors
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

#include "qcloak/qasm.hpp"

#include <cctype>
#include <charconv>
#include <map>
#include <numbers>
#include <optional>
#include <sstream>
#include <vector>

namespace qcloak {

QasmError::QasmError(std::size_t line, std::size_t column,
                     const std::string& message)
    : std::runtime_error("line " + std::to_string(line) + ", column " +
                         std::to_string(column) + ": " + message),
      line_(line),
      column_(column) {}

namespace {

enum class Tok { Ident, Number, String, Symbol, Arrow, End };

struct Token {
  Tok type = Tok::End;
  std::string text;
  std::size_t line = 0;
  std::size_t column = 0;
};

std::vector<Token> tokenize(std::string_view src) {
  std::vector<Token> out;
  std::size_t line = 1, col = 1, i = 0;
  auto advance = [&](std::size_t n) {
    for (std::size_t k = 0; k < n; ++k, ++i) {
      if (src[i] == '\n') {
        ++line;
        col = 1;
      } else {
        ++col;
      }
    }
  };
  while (i < src.size()) {
    char c = src[i];
    if (std::isspace(static_cast<unsigned char>(c))) {
      advance(1);
      continue;
    }
    if (c == '/' && i + 1 < src.size() && src[i + 1] == '/') {
      while (i < src.size() && src[i] != '\n') advance(1);
      continue;
    }
    Token t;
    t.line = line;
    t.column = col;
    std::size_t start = i;
    if (std::isalpha(static_cast<unsigned char>(c)) || c == '_') {
      std::size_t j = i;
      while (j < src.size() && (std::isalnum(static_cast<unsigned char>(src[j])) ||
                                src[j] == '_')) {
        ++j;
      }
      t.type = Tok::Ident;
      t.text = std::string(src.substr(start, j - start));
      advance(j - start);
    } else if (std::isdigit(static_cast<unsigned char>(c)) ||
               (c == '.' && i + 1 < src.size() &&
                std::isdigit(static_cast<unsigned char>(src[i + 1])))) {
      std::size_t j = i;
      while (j < src.size() && (std::isdigit(static_cast<unsigned char>(src[j])) ||
                                src[j] == '.')) {
        ++j;
      }
      if (j < src.size() && (src[j] == 'e' || src[j] == 'E')) {
        std::size_t k = j + 1;
        if (k < src.size() && (src[k] == '+' || src[k] == '-')) ++k;
        if (k < src.size() && std::isdigit(static_cast<unsigned char>(src[k]))) {
          j = k;
          while (j < src.size() && std::isdigit(static_cast<unsigned char>(src[j]))) ++j;
        }
      }
      t.type = Tok::Number;
      t.text = std::string(src.substr(start, j - start));
      advance(j - start);
    } else if (c == '"') {
      std::size_t j = i + 1;
      while (j < src.size() && src[j] != '"') ++j;
      if (j >= src.size()) throw QasmError(line, col, "unterminated string");
      t.type = Tok::String;
      t.text = std::string(src.substr(start + 1, j - start - 1));
      advance(j + 1 - start);
    } else if (c == '-' && i + 1 < src.size() && src[i + 1] == '>') {
      t.type = Tok::Arrow;
      t.text = "->";
      advance(2);
    } else if (std::string_view("[](),;+-*/").find(c) != std::string_view::npos) {
      t.type = Tok::Symbol;
      t.text = std::string(1, c);
      advance(1);
    } else {
      throw QasmError(line, col, std::string("unexpected character '") + c + "'");
    }
    out.push_back(std::move(t));
  }
  Token end;
  end.type = Tok::End;
  end.line = line;
  end.column = col;
  out.push_back(end);
  return out;
}

class Parser {
 public:
  explicit Parser(std::vector<Token> tokens) : toks_(std::move(tokens)) {}

  Circuit run() {
    if (peek_ident("OPENQASM")) {
      next();
      expect(Tok::Number, "version number");
      expect_symbol(";");
    }
    while (peek().type != Tok::End) statement();
    if (!qreg_) fail(peek(), "missing qreg declaration");
    Circuit circuit(qreg_size_);
    for (const Gate& g : gates_) circuit.append(g);
    std::vector<Qubit> measured;
    measured.reserve(measures_.size());
    for (const auto& [cbit, q] : measures_) measured.push_back(q);
    circuit.set_measured(std::move(measured));
    return circuit;
  }

 private:
  [[noreturn]] void fail(const Token& t, const std::string& msg) const {
    throw QasmError(t.line, t.column, msg);
  }
  const Token& peek() const { return toks_[pos_]; }
  const Token& next() { return toks_[pos_++]; }
  bool peek_ident(std::string_view name) const {
    return peek().type == Tok::Ident && peek().text == name;
  }
  bool peek_symbol(std::string_view s) const {
    return peek().type == Tok::Symbol && peek().text == s;
  }
  const Token& expect(Tok type, const std::string& what) {
    if (peek().type != type) fail(peek(), "expected " + what);
    return next();
  }
  void expect_symbol(std::string_view s) {
    if (!peek_symbol(s)) fail(peek(), "expected '" + std::string(s) + "'");
    next();
  }

  std::size_t parse_index() {
    const Token& t = expect(Tok::Number, "integer index");
    std::size_t value = 0;
    auto [ptr, ec] = std::from_chars(t.text.data(), t.text.data() + t.text.size(), value);
    if (ec != std::errc() || ptr != t.text.data() + t.text.size()) {
      fail(t, "expected integer index, got '" + t.text + "'");
    }
    return value;
  }

  void statement() {
    const Token& head = peek();
    if (head.type != Tok::Ident) fail(head, "expected statement");
    const std::string& word = head.text;
    if (word == "include") {
      next();
      expect(Tok::String, "include path");
      expect_symbol(";");
    } else if (word == "qreg" || word == "creg") {
      declaration(word == "qreg");
    } else if (word == "measure") {
      measure();
    } else if (word == "barrier") {
      while (!peek_symbol(";")) {
        if (peek().type == Tok::End) fail(peek(), "expected ';'");
        next();
      }
      next();
    } else {
      gate();
    }
  }

  void declaration(bool quantum) {
    const Token& kw = next();
    const Token& name = expect(Tok::Ident, "register name");
    expect_symbol("[");
    std::size_t size = parse_index();
    expect_symbol("]");
    expect_symbol(";");
    if (quantum) {
      if (qreg_) fail(kw, "duplicate register declaration '" + name.text + "'");
      if (size == 0) fail(name, "register size must be positive");
      qreg_ = name.text;
      qreg_size_ = size;
    } else {
      if (creg_) fail(kw, "duplicate register declaration '" + name.text + "'");
      creg_ = name.text;
      creg_size_ = size;
    }
  }

  Qubit qubit_operand() {
    const Token& name = expect(Tok::Ident, "qubit operand");
    if (!qreg_ || name.text != *qreg_) fail(name, "unknown register '" + name.text + "'");
    expect_symbol("[");
    const Token& idx_tok = peek();
    std::size_t idx = parse_index();
    expect_symbol("]");
    if (idx >= qreg_size_) {
      fail(idx_tok, "qubit index " + std::to_string(idx) + " out of range for " +
                        name.text + "[" + std::to_string(qreg_size_) + "]");
    }
    return static_cast<Qubit>(idx);
  }

  void measure() {
    next();
    const Token& qname = expect(Tok::Ident, "quantum register");
    if (!qreg_ || qname.text != *qreg_) fail(qname, "unknown register '" + qname.text + "'");
    bool indexed = peek_symbol("[");
    std::size_t qi = 0;
    const Token& qi_tok = toks_[pos_ + (indexed ? 1 : 0)];
    if (indexed) {
      next();
      qi = parse_index();
      expect_symbol("]");
      if (qi >= qreg_size_) fail(qi_tok, "qubit index out of range");
    }
    expect(Tok::Arrow, "'->'");
    const Token& cname = expect(Tok::Ident, "classical register");
    if (!creg_) {
      // Measuring into an undeclared register declares it with one bit per qubit.
      creg_ = cname.text;
      creg_size_ = qreg_size_;
    }
    if (cname.text != *creg_) fail(cname, "unknown register '" + cname.text + "'");
    if (indexed) {
      expect_symbol("[");
      const Token& ci_tok = peek();
      std::size_t ci = parse_index();
      expect_symbol("]");
      if (ci >= creg_size_) fail(ci_tok, "classical bit index out of range");
      measures_[ci] = static_cast<Qubit>(qi);
    } else {
      if (creg_size_ < qreg_size_) fail(cname, "classical register too small");
      for (std::size_t i = 0; i < qreg_size_; ++i) measures_[i] = static_cast<Qubit>(i);
    }
    expect_symbol(";");
  }

  // Measurement is terminal: no gate may follow it on the same qubit.
  void check_unmeasured(const Token& at, Qubit q) {
    for (const auto& [cbit, mq] : measures_) {
      if (mq == q) fail(at, "gate on qubit " + std::to_string(q) + " after its measurement");
    }
  }

  void gate() {
    const Token& name = next();
    static const std::map<std::string, GateKind, std::less<>> kinds = {
        {"x", GateKind::X},   {"sx", GateKind::SX}, {"rz", GateKind::RZ},
        {"rx", GateKind::RX}, {"cx", GateKind::CX}, {"CX", GateKind::CX}};
    auto it = kinds.find(name.text);
    if (it == kinds.end()) fail(name, "unknown gate name " + name.text);
    if (!qreg_) fail(name, "gate before qreg declaration");
    GateKind kind = it->second;
    double angle = 0.0;
    if (is_rotation(kind)) {
      expect_symbol("(");
      angle = expression();
      expect_symbol(")");
    }
    const Token& first = peek();
    Qubit a = qubit_operand();
    check_unmeasured(first, a);
    if (kind == GateKind::CX) {
      expect_symbol(",");
      const Token& second = peek();
      Qubit b = qubit_operand();
      if (a == b) fail(second, "cx operands must be distinct");
      check_unmeasured(second, b);
      gates_.push_back(Gate::cx(a, b));
    } else {
      gates_.push_back(Gate{kind, {a, a}, angle});
    }
    expect_symbol(";");
  }

  double expression() {
    double value = term();
    while (peek_symbol("+") || peek_symbol("-")) {
      bool plus = next().text == "+";
      double rhs = term();
      value = plus ? value + rhs : value - rhs;
    }
    return value;
  }
  double term() {
    double value = factor();
    while (peek_symbol("*") || peek_symbol("/")) {
      bool mul = next().text == "*";
      double rhs = factor();
      value = mul ? value * rhs : value / rhs;
    }
    return value;
  }
  double factor() {
    const Token& t = peek();
    if (peek_symbol("-")) {
      next();
      return -factor();
    }
    if (peek_symbol("+")) {
      next();
      return factor();
    }
    if (peek_symbol("(")) {
      next();
      double v = expression();
      expect_symbol(")");
      return v;
    }
    if (t.type == Tok::Ident && t.text == "pi") {
      next();
      return std::numbers::pi;
    }
    if (t.type == Tok::Number) {
      next();
      double v = 0.0;
      auto [ptr, ec] = std::from_chars(t.text.data(), t.text.data() + t.text.size(), v);
      if (ec != std::errc() || ptr != t.text.data() + t.text.size()) {
        fail(t, "malformed number '" + t.text + "'");
      }
      return v;
    }
    fail(t, "expected angle expression");
  }

  std::vector<Token> toks_;
  std::size_t pos_ = 0;
  std::optional<std::string> qreg_;
  std::optional<std::string> creg_;
  std::size_t qreg_size_ = 0;
  std::size_t creg_size_ = 0;
  std::vector<Gate> gates_;
  std::map<std::size_t, Qubit> measures_;
};

}  // namespace

Circuit parse_qasm(std::string_view text) { return Parser(tokenize(text)).run(); }

std::string format_angle(double value) {
  char buf[64];
  auto [ptr, ec] = std::to_chars(buf, buf + sizeof(buf), value);
  return std::string(buf, ptr);
}

namespace {

std::string full_precision(double value) {
  char buf[64];
  auto [ptr, ec] = std::to_chars(buf, buf + sizeof(buf), value, std::chars_format::general, 17);
  return std::string(buf, ptr);
}

}  // namespace

std::string serialize_qasm(const Circuit& circuit) {
  std::ostringstream out;
  out << "OPENQASM 2.0;\n";
  out << "qreg q[" << circuit.num_qubits() << "];\n";
  const auto& measured = circuit.measured_qubits();
  if (!measured.empty()) out << "creg c[" << measured.size() << "];\n";
  for (const Gate& g : circuit.gates()) {
    out << gate_name(g.kind);
    if (is_rotation(g.kind)) out << '(' << full_precision(g.angle) << ')';
    out << " q[" << g.qubits[0] << ']';
    if (g.kind == GateKind::CX) out << ",q[" << g.qubits[1] << ']';
    out << ";\n";
  }
  bool all_in_order = measured.size() == circuit.num_qubits();
  for (std::size_t i = 0; all_in_order && i < measured.size(); ++i) {
    all_in_order = measured[i] == i;
  }
  if (all_in_order && !measured.empty()) {
    out << "measure q -> c;\n";
  } else {
    for (std::size_t j = 0; j < measured.size(); ++j) {
      out << "measure q[" << measured[j] << "] -> c[" << j << "];\n";
    }
  }
  return out.str();
}

}  // namespace qcloak
