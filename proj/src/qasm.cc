// Copyright 2026 The qrover Authors
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

#include "qrover/qasm.h"

#include <cctype>
#include <cmath>
#include <cstdio>
#include <cstdlib>
#include <set>
#include <string>

#include "qrover/error.h"

namespace qrover {
namespace {

struct GateInfo {
  GateKind kind;
  std::string_view name;
  int arity;
  int params;
};

constexpr GateInfo kGates[] = {
    {GateKind::kH, "h", 1, 0},
    {GateKind::kX, "x", 1, 0},
    {GateKind::kY, "y", 1, 0},
    {GateKind::kZ, "z", 1, 0},
    {GateKind::kS, "s", 1, 0},
    {GateKind::kT, "t", 1, 0},
    {GateKind::kSdg, "sdg", 1, 0},
    {GateKind::kTdg, "tdg", 1, 0},
    {GateKind::kRx, "rx", 1, 1},
    {GateKind::kRy, "ry", 1, 1},
    {GateKind::kRz, "rz", 1, 1},
    {GateKind::kU3, "u3", 1, 3},
    {GateKind::kCx, "cx", 2, 0},
    {GateKind::kCz, "cz", 2, 0},
    {GateKind::kId, "id", 1, 0},
    {GateKind::kBitFlip, "bit_flip", 1, 1},
    {GateKind::kPhaseFlip, "phase_flip", 1, 1},
    {GateKind::kDepolarizing, "depolarizing", 1, 1},
};

const GateInfo& info(GateKind kind) {
  for (const auto& g : kGates) {
    if (g.kind == kind) return g;
  }
  throw Error(ErrorCode::kInvalidArgument, "unknown gate kind");
}

constexpr int kMaxQubits = 64;
constexpr int kMaxExpressionDepth = 128;

enum class Tok { kIdent, kNumber, kString, kSymbol, kArrow, kSlot, kEnd };

struct Token {
  Tok type = Tok::kEnd;
  std::string text;
  int line = 1;
  int col = 1;
};

class Lexer {
 public:
  explicit Lexer(std::string_view src) : src_(src) {}

  Token next() {
    skip_space_and_comments();
    Token t;
    t.line = line_;
    t.col = col_;
    if (pending_slot_) {
      t = *pending_slot_;
      pending_slot_.reset();
      return t;
    }
    if (pos_ >= src_.size()) {
      t.type = Tok::kEnd;
      return t;
    }
    char c = src_[pos_];
    if (std::isalpha(static_cast<unsigned char>(c)) || c == '_') {
      t.type = Tok::kIdent;
      while (pos_ < src_.size() &&
             (std::isalnum(static_cast<unsigned char>(src_[pos_])) ||
              src_[pos_] == '_')) {
        t.text.push_back(advance());
      }
      return t;
    }
    if (std::isdigit(static_cast<unsigned char>(c)) ||
        (c == '.' && pos_ + 1 < src_.size() &&
         std::isdigit(static_cast<unsigned char>(src_[pos_ + 1])))) {
      t.type = Tok::kNumber;
      read_number(t.text);
      return t;
    }
    if (c == '"') {
      t.type = Tok::kString;
      advance();
      while (pos_ < src_.size() && src_[pos_] != '"' && src_[pos_] != '\n') {
        t.text.push_back(advance());
      }
      if (pos_ >= src_.size() || src_[pos_] != '"') {
        throw ParseError(t.line, t.col, "unterminated string");
      }
      advance();
      return t;
    }
    if (c == '-' && pos_ + 1 < src_.size() && src_[pos_ + 1] == '>') {
      advance();
      advance();
      t.type = Tok::kArrow;
      t.text = "->";
      return t;
    }
    if (std::string_view(";,[]()+-*/").find(c) != std::string_view::npos) {
      t.type = Tok::kSymbol;
      t.text.push_back(advance());
      return t;
    }
    throw ParseError(t.line, t.col, "unexpected character");
  }

 private:
  char advance() {
    char c = src_[pos_++];
    if (c == '\n') {
      ++line_;
      col_ = 1;
    } else {
      ++col_;
    }
    return c;
  }

  void read_number(std::string& out) {
    auto digits = [&] {
      while (pos_ < src_.size() &&
             std::isdigit(static_cast<unsigned char>(src_[pos_]))) {
        out.push_back(advance());
      }
    };
    digits();
    if (pos_ < src_.size() && src_[pos_] == '.') {
      out.push_back(advance());
      digits();
    }
    if (pos_ < src_.size() && (src_[pos_] == 'e' || src_[pos_] == 'E')) {
      std::size_t save = pos_;
      int save_col = col_;
      std::string exp(1, advance());
      if (pos_ < src_.size() && (src_[pos_] == '+' || src_[pos_] == '-')) {
        exp.push_back(advance());
      }
      if (pos_ < src_.size() &&
          std::isdigit(static_cast<unsigned char>(src_[pos_]))) {
        out += exp;
        digits();
      } else {
        pos_ = save;
        col_ = save_col;
      }
    }
  }

  void skip_space_and_comments() {
    while (pos_ < src_.size()) {
      char c = src_[pos_];
      if (c == ' ' || c == '\t' || c == '\r' || c == '\n') {
        advance();
      } else if (c == '/' && pos_ + 1 < src_.size() && src_[pos_ + 1] == '/') {
        int line = line_;
        int col = col_;
        std::string body;
        while (pos_ < src_.size() && src_[pos_] != '\n') {
          body.push_back(advance());
        }
        auto slot = parse_slot_comment(body);
        if (slot && !pending_slot_) {
          Token t;
          t.type = Tok::kSlot;
          t.text = *slot;
          t.line = line;
          t.col = col;
          pending_slot_ = t;
          return;
        }
      } else {
        return;
      }
    }
  }

  static std::optional<std::string> parse_slot_comment(std::string_view body) {
    body.remove_prefix(2);
    while (!body.empty() && body.front() == ' ') body.remove_prefix(1);
    constexpr std::string_view kTag = "@slot ";
    if (body.substr(0, kTag.size()) != kTag) return std::nullopt;
    body.remove_prefix(kTag.size());
    while (!body.empty() && body.back() == ' ') body.remove_suffix(1);
    if (body.empty() || body.size() > 9) return std::nullopt;
    for (char c : body) {
      if (!std::isdigit(static_cast<unsigned char>(c))) return std::nullopt;
    }
    return std::string(body);
  }

  std::string_view src_;
  std::size_t pos_ = 0;
  int line_ = 1;
  int col_ = 1;
  std::optional<Token> pending_slot_;
};

class Parser {
 public:
  explicit Parser(std::string_view src) : lexer_(src) { cur_ = lexer_.next(); }

  Circuit parse() {
    expect_ident("OPENQASM");
    Token version = cur_;
    if (version.type != Tok::kNumber) fail(version, "expected version number");
    if (std::strtod(version.text.c_str(), nullptr) != 2.0) {
      fail(version, "only OpenQASM 2.0 is supported");
    }
    shift();
    expect_symbol(";");
    while (cur_.type != Tok::kEnd) statement();
    if (!have_qreg_) fail(cur_, "missing qreg declaration");
    circuit_.validate();
    return circuit_;
  }

 private:
  [[noreturn]] void fail(const Token& t, const std::string& msg) {
    throw ParseError(t.line, t.col, msg);
  }

  void shift() {
    prev_ = cur_;
    cur_ = lexer_.next();
  }

  bool is_symbol(std::string_view s) const {
    return cur_.type == Tok::kSymbol && cur_.text == s;
  }

  void expect_symbol(std::string_view s) {
    if (!is_symbol(s)) fail(cur_, "expected '" + std::string(s) + "'");
    shift();
  }

  void expect_ident(std::string_view s) {
    if (cur_.type != Tok::kIdent || cur_.text != s) {
      fail(cur_, "expected '" + std::string(s) + "'");
    }
    shift();
  }

  std::string ident() {
    if (cur_.type != Tok::kIdent) fail(cur_, "expected identifier");
    std::string name = cur_.text;
    shift();
    return name;
  }

  int integer(int max_value) {
    if (cur_.type != Tok::kNumber) fail(cur_, "expected integer");
    const std::string& text = cur_.text;
    if (text.size() > 9 ||
        text.find_first_not_of("0123456789") != std::string::npos) {
      fail(cur_, "expected small non-negative integer");
    }
    int value = std::atoi(text.c_str());
    if (value > max_value) fail(cur_, "integer out of range");
    shift();
    return value;
  }

  void statement() {
    Token head = cur_;
    if (head.type == Tok::kSlot) fail(head, "slot annotation without a gate");
    if (head.type != Tok::kIdent) fail(head, "expected statement");
    const std::string& word = head.text;
    if (word == "include") {
      shift();
      if (cur_.type != Tok::kString) fail(cur_, "expected file name");
      shift();
      expect_symbol(";");
    } else if (word == "qreg") {
      shift();
      if (have_qreg_) fail(head, "multiple qreg declarations");
      qreg_ = ident();
      expect_symbol("[");
      Token size_tok = cur_;
      int size = integer(kMaxQubits);
      if (size < 1) fail(size_tok, "qreg size must be positive");
      expect_symbol("]");
      expect_symbol(";");
      circuit_.n_qubits = size;
      have_qreg_ = true;
    } else if (word == "creg") {
      shift();
      std::string name = ident();
      expect_symbol("[");
      int size = integer(1 << 20);
      expect_symbol("]");
      expect_symbol(";");
      if (name == qreg_) fail(head, "creg name clashes with qreg");
      cregs_.insert(name);
      (void)size;
    } else if (word == "barrier") {
      shift();
      require_qreg(head);
      qubit_args();
      expect_symbol(";");
    } else if (word == "measure") {
      shift();
      require_qreg(head);
      measure();
    } else if (word == "gate" || word == "opaque" || word == "if" ||
               word == "reset") {
      fail(head, "unsupported statement '" + word + "'");
    } else {
      gate();
    }
  }

  void require_qreg(const Token& at) {
    if (!have_qreg_) fail(at, "statement before qreg declaration");
  }

  // One argument: either q[i] (returns {i}) or q (returns every qubit).
  std::vector<int> qubit_arg() {
    Token at = cur_;
    std::string name = ident();
    if (name != qreg_) fail(at, "unknown quantum register '" + name + "'");
    if (is_symbol("[")) {
      shift();
      Token idx_tok = cur_;
      int idx = integer(kMaxQubits);
      if (idx >= circuit_.n_qubits) fail(idx_tok, "qubit index out of range");
      expect_symbol("]");
      return {idx};
    }
    std::vector<int> all(circuit_.n_qubits);
    for (int i = 0; i < circuit_.n_qubits; ++i) all[i] = i;
    return all;
  }

  std::vector<std::vector<int>> qubit_args() {
    std::vector<std::vector<int>> args;
    args.push_back(qubit_arg());
    while (is_symbol(",")) {
      shift();
      args.push_back(qubit_arg());
    }
    return args;
  }

  void measure() {
    std::vector<int> qubits = qubit_arg();
    if (cur_.type != Tok::kArrow) fail(cur_, "expected '->'");
    shift();
    Token at = cur_;
    std::string creg = ident();
    if (!cregs_.count(creg)) fail(at, "unknown classical register '" + creg + "'");
    if (is_symbol("[")) {
      shift();
      integer(1 << 20);
      expect_symbol("]");
      if (qubits.size() != 1) fail(at, "register/bit size mismatch");
    }
    expect_symbol(";");
    for (int q : qubits) circuit_.measured_qubits.push_back(q);
  }

  void gate() {
    Token head = cur_;
    std::string name = ident();
    std::optional<GateKind> kind = gate_from_name(name);
    if (!kind) fail(head, "unknown gate '" + name + "'");
    require_qreg(head);
    const GateInfo& g = info(*kind);

    std::vector<double> params;
    if (is_symbol("(")) {
      shift();
      if (!is_symbol(")")) {
        params.push_back(expression(0));
        while (is_symbol(",")) {
          shift();
          params.push_back(expression(0));
        }
      }
      expect_symbol(")");
    }
    if (static_cast<int>(params.size()) != g.params) {
      fail(head, "gate '" + name + "' expects " + std::to_string(g.params) +
                     " parameter(s)");
    }
    for (double p : params) {
      if (!std::isfinite(p)) fail(head, "non-finite parameter");
    }
    if (is_noise(*kind) && !(params[0] >= 0.0 && params[0] <= 1.0)) {
      fail(head, "noise probability outside [0, 1]");
    }

    Token args_tok = cur_;
    std::vector<std::vector<int>> args = qubit_args();
    Token end = cur_;
    expect_symbol(";");
    if (static_cast<int>(args.size()) != g.arity) {
      fail(args_tok, "gate '" + name + "' expects " +
                         std::to_string(g.arity) + " qubit argument(s)");
    }

    std::optional<int> slot;
    if (cur_.type == Tok::kSlot && cur_.line == end.line) {
      if (!is_rotation(*kind)) fail(cur_, "slot annotation on non-rotation");
      slot = std::atoi(cur_.text.c_str());
      shift();
    }

    if (g.arity == 1) {
      if (slot && args[0].size() != 1) {
        fail(args_tok, "slot annotation on broadcast gate");
      }
      for (int q : args[0]) circuit_.add(*kind, {q}, params, slot);
    } else {
      if (args[0].size() != 1 || args[1].size() != 1) {
        fail(args_tok, "two-qubit gates need indexed arguments");
      }
      if (args[0][0] == args[1][0]) fail(args_tok, "duplicate qubit argument");
      circuit_.add(*kind, {args[0][0], args[1][0]}, params);
    }
    if (slot) {
      if (!slots_.insert(*slot).second) fail(head, "duplicate slot id");
    }
  }

  double expression(int depth) {
    if (depth > kMaxExpressionDepth) fail(cur_, "expression nested too deeply");
    double value = term(depth);
    while (is_symbol("+") || is_symbol("-")) {
      bool plus = cur_.text == "+";
      shift();
      double rhs = term(depth);
      value = plus ? value + rhs : value - rhs;
    }
    return value;
  }

  double term(int depth) {
    double value = unary(depth);
    while (is_symbol("*") || is_symbol("/")) {
      bool times = cur_.text == "*";
      shift();
      double rhs = unary(depth);
      value = times ? value * rhs : value / rhs;
    }
    return value;
  }

  double unary(int depth) {
    if (depth > kMaxExpressionDepth) fail(cur_, "expression nested too deeply");
    if (is_symbol("-")) {
      shift();
      return -unary(depth + 1);
    }
    if (is_symbol("+")) {
      shift();
      return unary(depth + 1);
    }
    return primary(depth);
  }

  double primary(int depth) {
    if (cur_.type == Tok::kNumber) {
      double v = std::strtod(cur_.text.c_str(), nullptr);
      shift();
      return v;
    }
    if (cur_.type == Tok::kIdent && cur_.text == "pi") {
      shift();
      return M_PI;
    }
    if (is_symbol("(")) {
      shift();
      double v = expression(depth + 1);
      expect_symbol(")");
      return v;
    }
    fail(cur_, "malformed expression");
  }

  Lexer lexer_;
  Token cur_;
  Token prev_;
  Circuit circuit_;
  bool have_qreg_ = false;
  std::string qreg_;
  std::set<std::string> cregs_;
  std::set<int> slots_;
};

}  // namespace

std::string_view gate_name(GateKind kind) { return info(kind).name; }

std::optional<GateKind> gate_from_name(std::string_view name) {
  for (const auto& g : kGates) {
    if (g.name == name) return g.kind;
  }
  if (name == "U") return GateKind::kU3;
  if (name == "CX") return GateKind::kCx;
  return std::nullopt;
}

int gate_arity(GateKind kind) { return info(kind).arity; }
int gate_param_count(GateKind kind) { return info(kind).params; }

bool is_noise(GateKind kind) {
  return kind == GateKind::kBitFlip || kind == GateKind::kPhaseFlip ||
         kind == GateKind::kDepolarizing;
}

bool is_rotation(GateKind kind) {
  return kind == GateKind::kRx || kind == GateKind::kRy ||
         kind == GateKind::kRz;
}

Circuit& Circuit::add(GateKind kind, std::vector<int> qubits,
                      std::vector<double> params, std::optional<int> slot) {
  ops.push_back(GateOp{kind, std::move(qubits), std::move(params), slot});
  return *this;
}

void Circuit::validate() const {
  auto bad = [](const std::string& msg) {
    throw Error(ErrorCode::kInvalidArgument, msg);
  };
  if (n_qubits < 1) bad("circuit needs at least one qubit");
  std::set<int> slots;
  for (const GateOp& op : ops) {
    const GateInfo& g = info(op.kind);
    if (static_cast<int>(op.qubits.size()) != g.arity) bad("arity mismatch");
    if (static_cast<int>(op.params.size()) != g.params) bad("parameter count");
    for (int q : op.qubits) {
      if (q < 0 || q >= n_qubits) bad("qubit index out of range");
    }
    if (g.arity == 2 && op.qubits[0] == op.qubits[1]) bad("duplicate qubit");
    for (double p : op.params) {
      if (!std::isfinite(p)) bad("non-finite angle");
    }
    if (is_noise(op.kind) && !(op.params[0] >= 0.0 && op.params[0] <= 1.0)) {
      bad("noise probability outside [0, 1]");
    }
    if (op.slot) {
      if (!is_rotation(op.kind)) bad("slot on non-rotation gate");
      if (!slots.insert(*op.slot).second) bad("duplicate slot id");
    }
  }
  for (int q : measured_qubits) {
    if (q < 0 || q >= n_qubits) bad("measured qubit out of range");
  }
}

int Circuit::slot_count() const {
  int count = 0;
  for (const GateOp& op : ops) count += op.slot ? 1 : 0;
  return count;
}

Circuit parse_qasm(std::string_view source) { return Parser(source).parse(); }

std::string format_real(double value) {
  char buf[40];
  std::snprintf(buf, sizeof(buf), "%.17g", value);
  return buf;
}

std::string emit_qasm(const Circuit& circuit) {
  std::string out = "OPENQASM 2.0;\ninclude \"qelib1.inc\";\n";
  out += "qreg q[" + std::to_string(circuit.n_qubits) + "];\n";
  if (!circuit.measured_qubits.empty()) {
    out += "creg c[" + std::to_string(circuit.measured_qubits.size()) + "];\n";
  }
  for (const GateOp& op : circuit.ops) {
    out += gate_name(op.kind);
    if (!op.params.empty()) {
      out += "(";
      for (std::size_t i = 0; i < op.params.size(); ++i) {
        if (i) out += ",";
        out += format_real(op.params[i]);
      }
      out += ")";
    }
    for (std::size_t i = 0; i < op.qubits.size(); ++i) {
      out += i ? "," : " ";
      out += "q[" + std::to_string(op.qubits[i]) + "]";
    }
    out += ";";
    if (op.slot) out += " // @slot " + std::to_string(*op.slot);
    out += "\n";
  }
  for (std::size_t i = 0; i < circuit.measured_qubits.size(); ++i) {
    out += "measure q[" + std::to_string(circuit.measured_qubits[i]) +
           "] -> c[" + std::to_string(i) + "];\n";
  }
  return out;
}

}  // namespace qrover
