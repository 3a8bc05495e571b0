#pragma once

#include <cstddef>
#include <stdexcept>
#include <string>
#include <string_view>
#include <vector>

#include "baqe/formula.hpp"
#include "baqe/term.hpp"

namespace baqe {

/// A located diagnostic. Codes:
///   E_LEXICAL      unexpected character
///   E_SYNTAX       input does not follow the grammar
///   E_EMPTY        no formula in the input
///   E_NUMBER       numeral out of range
///   E_C_INDEX      C[k] with k = 0
///   E_RES_MODULUS  Res[n,r] with n = 0
class ParseError : public std::runtime_error {
public:
  ParseError(std::string code, const std::string& message, std::size_t line, std::size_t column);

  const std::string& code() const { return code_; }
  std::size_t line() const { return line_; }
  std::size_t column() const { return column_; }
  const std::string& message() const { return message_; }

private:
  std::string code_;
  std::string message_;
  std::size_t line_;
  std::size_t column_;
};

/// Grammar:
///   formula := imp { "<->" imp }
///   imp     := or { "->" or }
///   or      := and { "|" and }
///   and     := unary { "&" unary }
///   unary   := term relop term | "~" unary | ("E" | "A") var unary
///            | "C[" nat "](" term ")" | "Fin(" term ")"
///            | "Res[" nat "," int "](" term ")" | "(" formula ")"
///   relop   := "=" | "!=" | "<" | "<="
///   term    := prod { ("+" | "|" | "-") prod }
///   prod    := tun { ("." | "&") tun }
///   tun     := "~" tun | "0" | "1" | var | "(" term ")"
/// Binary connectives associate to the left. A quantifier scopes over a
/// single unary formula, so binary bodies need parentheses. The right side
/// of a relation stops at a top-level "&" or "|", which belong to the
/// formula: "x = 0 & y = 0" is a conjunction.
Formula parse(std::string_view text);

/// Formulas separated by ";". Comments run from "#" to the end of the line.
std::vector<Formula> parse_all(std::string_view text);

Term parse_term(std::string_view text);

/// Re-parses to an equal Formula. Terms print in ring form, e.g.
/// "C[2](x . y)", "Res[3,2](x)", "x . y + x != 0".
std::string print(const Formula& f);
inline std::string print(const Term& t) { return to_string(t); }

}  // namespace baqe
