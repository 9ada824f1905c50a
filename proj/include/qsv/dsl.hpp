#pragma once

#include <cctype>
#include <optional>
#include <cstddef>
#include <string>
#include <variant>
#include <vector>

#include "qsv/state.hpp"

// Line-oriented circuit format:
//   qubits <n>        required first significant line
//   h|x <q...>        one op per listed target
//   z <q>
//   cz <c> <t>
//   mcz <c...> <t>
//   swap <a> <b>
//   cswap <c> <a> <b>
// '#' comments, blank lines, CRLF and mixed case are all accepted; the
// formatter emits the lowercase single-space LF canonical form.

namespace qsv {

enum class ParseErrorKind { syntax, unknown_gate, bad_index, arity, missing_header };

struct ParseError {
  int line = 0;    // 1-based
  int column = 0;  // 1-based
  std::string message;
  ParseErrorKind kind = ParseErrorKind::syntax;
};

using ParseResult = std::variant<Circuit, ParseError>;

namespace detail {

struct Token {
  std::string text;
  int column;
};

inline std::vector<Token> tokenize_line(const std::string& line) {
  std::vector<Token> tokens;
  std::size_t i = 0;
  while (i < line.size()) {
    if (line[i] == '#') break;
    if (line[i] == ' ' || line[i] == '\t' || line[i] == '\r') { ++i; continue; }
    const std::size_t start = i;
    while (i < line.size() && line[i] != ' ' && line[i] != '\t' && line[i] != '\r' && line[i] != '#') ++i;
    tokens.push_back({line.substr(start, i - start), static_cast<int>(start) + 1});
  }
  return tokens;
}

inline std::string lowercase(std::string s) {
  for (char& c : s) c = static_cast<char>(std::tolower(static_cast<unsigned char>(c)));
  return s;
}

inline bool parse_uint(const std::string& s, long& out) {
  if (s.empty() || s.size() > 9) return false;
  long v = 0;
  for (char c : s) {
    if (c < '0' || c > '9') return false;
    v = v * 10 + (c - '0');
  }
  out = v;
  return true;
}

}  // namespace detail

inline ParseResult parse_circuit(const std::string& text) {
  using detail::Token;
  Circuit circuit;
  bool header_seen = false;
  int line_no = 0;
  std::size_t pos = 0;
  while (pos <= text.size()) {
    const std::size_t eol = text.find('\n', pos);
    const std::string line = text.substr(pos, eol == std::string::npos ? std::string::npos : eol - pos);
    pos = eol == std::string::npos ? text.size() + 1 : eol + 1;
    ++line_no;
    const std::vector<Token> tokens = detail::tokenize_line(line);
    if (tokens.empty()) continue;
    const std::string word = detail::lowercase(tokens[0].text);

    if (!header_seen) {
      if (word != "qubits")
        return ParseError{line_no, tokens[0].column, "expected 'qubits <n>' header", ParseErrorKind::missing_header};
      if (tokens.size() != 2)
        return ParseError{line_no, tokens[0].column, "'qubits' takes exactly one count", ParseErrorKind::syntax};
      long n = 0;
      if (!detail::parse_uint(tokens[1].text, n) || n < 1 || n > 24)
        return ParseError{line_no, tokens[1].column, "qubit count must be an integer in 1..24", ParseErrorKind::syntax};
      circuit.num_qubits = static_cast<int>(n);
      header_seen = true;
      continue;
    }

    std::optional<ParseError> bad;
    auto indices = [&](std::size_t first, std::size_t count, std::vector<int>& out) {
      for (std::size_t k = 0; k < count; ++k) {
        const Token& tok = tokens[first + k];
        long v = 0;
        if (!detail::parse_uint(tok.text, v)) {
          bad = ParseError{line_no, tok.column, "expected a qubit index, got '" + tok.text + "'", ParseErrorKind::syntax};
          return false;
        }
        if (v >= circuit.num_qubits) {
          bad = ParseError{line_no, tok.column,
                           "qubit " + tok.text + " out of range for " + std::to_string(circuit.num_qubits) + " qubits",
                           ParseErrorKind::bad_index};
          return false;
        }
        for (int prev : out)
          if (prev == static_cast<int>(v)) {
            bad = ParseError{line_no, tok.column, "duplicate qubit " + tok.text, ParseErrorKind::bad_index};
            return false;
          }
        out.push_back(static_cast<int>(v));
      }
      return true;
    };

    const std::size_t argc = tokens.size() - 1;
    if (word == "h" || word == "x") {
      if (argc < 1)
        return ParseError{line_no, tokens[0].column, "'" + word + "' needs at least one target", ParseErrorKind::arity};
      std::vector<int> qs;
      if (!indices(1, argc, qs)) return *bad;
      for (int q : qs) circuit.ops.push_back(word == "h" ? GateOp::h(q) : GateOp::x(q));
    } else if (word == "z") {
      if (argc != 1)
        return ParseError{line_no, tokens[0].column, "'z' takes exactly one target", ParseErrorKind::arity};
      std::vector<int> qs;
      if (!indices(1, 1, qs)) return *bad;
      circuit.ops.push_back(GateOp::z(qs[0]));
    } else if (word == "cz") {
      if (argc != 2)
        return ParseError{line_no, tokens[0].column, "'cz' takes a control and a target", ParseErrorKind::arity};
      std::vector<int> qs;
      if (!indices(1, 2, qs)) return *bad;
      circuit.ops.push_back(GateOp::mcz({qs[0]}, qs[1]));
    } else if (word == "mcz") {
      if (argc < 1)
        return ParseError{line_no, tokens[0].column, "'mcz' needs at least a target", ParseErrorKind::arity};
      std::vector<int> qs;
      if (!indices(1, argc, qs)) return *bad;
      const int target = qs.back();
      qs.pop_back();
      circuit.ops.push_back(GateOp::mcz(std::move(qs), target));
    } else if (word == "swap") {
      if (argc != 2)
        return ParseError{line_no, tokens[0].column, "'swap' takes two qubits", ParseErrorKind::arity};
      std::vector<int> qs;
      if (!indices(1, 2, qs)) return *bad;
      circuit.ops.push_back(GateOp::swap(qs[0], qs[1]));
    } else if (word == "cswap") {
      if (argc != 3)
        return ParseError{line_no, tokens[0].column, "'cswap' takes a control and two swap qubits", ParseErrorKind::arity};
      std::vector<int> qs;
      if (!indices(1, 3, qs)) return *bad;
      circuit.ops.push_back(GateOp::cswap(qs[0], qs[1], qs[2]));
    } else {
      return ParseError{line_no, tokens[0].column, "unknown gate '" + tokens[0].text + "'", ParseErrorKind::unknown_gate};
    }
  }
  if (!header_seen)
    return ParseError{1, 1, "expected 'qubits <n>' header", ParseErrorKind::missing_header};
  return circuit;
}

inline std::string format_circuit(const Circuit& c) {
  if (c.num_qubits < 1 || c.num_qubits > 24) throw std::invalid_argument("qubit count out of range");
  std::string out = "qubits " + std::to_string(c.num_qubits) + "\n";
  for (const auto& op : c.ops) {
    validate_op(op, c.num_qubits);
    switch (op.kind) {
      case GateOp::Kind::H: out += "h " + std::to_string(op.qubits[0]); break;
      case GateOp::Kind::X: out += "x " + std::to_string(op.qubits[0]); break;
      case GateOp::Kind::Z: out += "z " + std::to_string(op.qubits[0]); break;
      case GateOp::Kind::MCZ:
        if (op.qubits.size() == 2) {
          out += "cz " + std::to_string(op.qubits[0]) + " " + std::to_string(op.qubits[1]);
        } else {
          out += "mcz";
          for (int q : op.qubits) out += " " + std::to_string(q);
        }
        break;
      case GateOp::Kind::Swap:
        out += "swap " + std::to_string(op.qubits[0]) + " " + std::to_string(op.qubits[1]);
        break;
      case GateOp::Kind::CSwap:
        out += "cswap " + std::to_string(op.qubits[0]) + " " + std::to_string(op.qubits[1]) + " " +
               std::to_string(op.qubits[2]);
        break;
    }
    out += "\n";
  }
  return out;
}

}  // namespace qsv
