#include "baqe/syntax.hpp"

#include <cctype>
#include <cstdint>
#include <limits>
#include <optional>

namespace baqe {

ParseError::ParseError(std::string code, const std::string& message, std::size_t line, std::size_t column)
    : std::runtime_error(std::to_string(line) + ":" + std::to_string(column) + ": " + message + " [" + code + "]"),
      code_(std::move(code)),
      message_(message),
      line_(line),
      column_(column) {}

namespace {

enum class Tok {
  Ident,
  Number,
  KwE,
  KwA,
  KwC,
  KwFin,
  KwRes,
  LParen,
  RParen,
  LBracket,
  RBracket,
  Comma,
  Semi,
  Tilde,
  Amp,
  Bar,
  Plus,
  Dot,
  Minus,
  Eq,
  Neq,
  Lt,
  Le,
  Arrow,
  DArrow,
  End
};

struct Token {
  Tok kind;
  std::string text;
  std::size_t line;
  std::size_t column;
  std::size_t index;  // position in the token stream, for error ranking
};

std::vector<Token> lex(std::string_view s) {
  std::vector<Token> out;
  std::size_t line = 1;
  std::size_t col = 1;
  std::size_t i = 0;
  auto push = [&](Tok k, std::string text, std::size_t c) { out.push_back({k, std::move(text), line, c, out.size()}); };
  while (i < s.size()) {
    const char ch = s[i];
    if (ch == '\n') {
      ++line;
      col = 1;
      ++i;
      continue;
    }
    if (std::isspace(static_cast<unsigned char>(ch))) {
      ++col;
      ++i;
      continue;
    }
    if (ch == '#') {
      while (i < s.size() && s[i] != '\n') ++i;
      continue;
    }
    const std::size_t start_col = col;
    if (std::isalpha(static_cast<unsigned char>(ch)) || ch == '_') {
      std::size_t j = i;
      while (j < s.size() && (std::isalnum(static_cast<unsigned char>(s[j])) || s[j] == '_')) ++j;
      std::string word(s.substr(i, j - i));
      Tok k = Tok::Ident;
      if (word == "E") k = Tok::KwE;
      else if (word == "A") k = Tok::KwA;
      else if (word == "C") k = Tok::KwC;
      else if (word == "Fin") k = Tok::KwFin;
      else if (word == "Res") k = Tok::KwRes;
      push(k, std::move(word), start_col);
      col += j - i;
      i = j;
      continue;
    }
    if (std::isdigit(static_cast<unsigned char>(ch))) {
      std::size_t j = i;
      while (j < s.size() && std::isdigit(static_cast<unsigned char>(s[j]))) ++j;
      push(Tok::Number, std::string(s.substr(i, j - i)), start_col);
      col += j - i;
      i = j;
      continue;
    }
    auto starts = [&](std::string_view p) { return s.substr(i, p.size()) == p; };
    struct Sym {
      std::string_view text;
      Tok kind;
    };
    static constexpr Sym symbols[] = {
        {"<->", Tok::DArrow}, {"->", Tok::Arrow}, {"<=", Tok::Le},     {"!=", Tok::Neq},   {"<", Tok::Lt},
        {"=", Tok::Eq},       {"(", Tok::LParen}, {")", Tok::RParen}, {"[", Tok::LBracket}, {"]", Tok::RBracket},
        {",", Tok::Comma},    {";", Tok::Semi},   {"~", Tok::Tilde},  {"&", Tok::Amp},    {"|", Tok::Bar},
        {"+", Tok::Plus},     {".", Tok::Dot},    {"-", Tok::Minus},
    };
    bool matched = false;
    for (const auto& sym : symbols) {
      if (starts(sym.text)) {
        push(sym.kind, std::string(sym.text), start_col);
        col += sym.text.size();
        i += sym.text.size();
        matched = true;
        break;
      }
    }
    if (!matched) {
      throw ParseError("E_LEXICAL", std::string("unexpected character '") + ch + "'", line, start_col);
    }
  }
  out.push_back({Tok::End, "", line, col, out.size()});
  return out;
}

std::string describe(const Token& t) { return t.kind == Tok::End ? "end of input" : "'" + t.text + "'"; }

class Parser {
public:
  explicit Parser(std::vector<Token> tokens) : toks_(std::move(tokens)) {}

  std::vector<Formula> statements() {
    std::vector<Formula> out;
    while (true) {
      while (peek().kind == Tok::Semi) ++pos_;
      if (peek().kind == Tok::End) break;
      out.push_back(formula());
      if (peek().kind != Tok::Semi && peek().kind != Tok::End) {
        fail("expected ';' or end of input, found " + describe(peek()));
      }
    }
    return out;
  }

  Term single_term() {
    Term t = normalize(term(false));
    if (peek().kind != Tok::End) fail("expected end of input, found " + describe(peek()));
    return t;
  }

private:
  const Token& peek() const { return toks_[pos_]; }
  bool accept(Tok k) {
    if (peek().kind != k) return false;
    ++pos_;
    return true;
  }
  [[noreturn]] void fail(const std::string& msg, const std::string& code = "E_SYNTAX") const {
    throw ParseError(code, msg, peek().line, peek().column);
  }
  const Token& expect(Tok k, const char* what) {
    if (peek().kind != k) fail(std::string("expected ") + what + ", found " + describe(peek()));
    return toks_[pos_++];
  }

  Formula formula() {
    Formula f = implication();
    while (accept(Tok::DArrow)) f = Formula::biconditional(f, implication());
    return f;
  }

  Formula implication() {
    Formula f = disjunction();
    while (accept(Tok::Arrow)) f = Formula::implication(f, disjunction());
    return f;
  }

  Formula disjunction() {
    Formula f = conjunction();
    while (accept(Tok::Bar)) f = Formula::disjunction(f, conjunction());
    return f;
  }

  Formula conjunction() {
    Formula f = unary();
    while (accept(Tok::Amp)) f = Formula::conjunction(f, unary());
    return f;
  }

  Formula unary() {
    switch (peek().kind) {
      case Tok::KwE:
      case Tok::KwA: {
        const bool exists = peek().kind == Tok::KwE;
        ++pos_;
        std::string var = expect(Tok::Ident, "a variable after the quantifier").text;
        Formula body = unary();
        return exists ? Formula::exists(std::move(var), std::move(body))
                      : Formula::forall(std::move(var), std::move(body));
      }
      case Tok::KwC: {
        ++pos_;
        expect(Tok::LBracket, "'[' after C");
        const Token& k = peek();
        const std::uint32_t index = natural("the C index");
        if (index == 0) throw ParseError("E_C_INDEX", "C[k] requires k >= 1", k.line, k.column);
        expect(Tok::RBracket, "']'");
        return Formula::at_least(index, argument());
      }
      case Tok::KwFin:
        ++pos_;
        return Formula::fin(argument());
      case Tok::KwRes: {
        ++pos_;
        expect(Tok::LBracket, "'[' after Res");
        const Token& n = peek();
        const std::uint32_t modulus = natural("the Res modulus");
        if (modulus == 0) throw ParseError("E_RES_MODULUS", "Res[n,r] requires n >= 1", n.line, n.column);
        expect(Tok::Comma, "','");
        const bool negative = accept(Tok::Minus);
        const std::int64_t r = static_cast<std::int64_t>(natural("the Res residue"));
        expect(Tok::RBracket, "']'");
        return Formula::res(modulus, negative ? -r : r, argument());
      }
      default:
        break;
    }
    // A relation between terms, or else a negation or parenthesized formula.
    const std::size_t start = pos_;
    try {
      return relation();
    } catch (const ParseError& first) {
      const std::size_t failed_at = pos_;
      pos_ = start;
      if (peek().kind == Tok::Tilde) {
        ++pos_;
        return Formula::negation(unary());
      }
      if (peek().kind != Tok::LParen) throw;
      ++pos_;
      try {
        Formula f = formula();
        expect(Tok::RParen, "')'");
        return f;
      } catch (const ParseError& second) {
        if (second.code() != "E_SYNTAX" || pos_ >= failed_at) throw;
        throw first;
      }
    }
  }

  Term argument() {
    expect(Tok::LParen, "'('");
    Term t = normalize(term(false));
    expect(Tok::RParen, "')'");
    return t;
  }

  Formula relation() {
    const TermExpr lhs = term(false);
    const Tok op = peek().kind;
    if (op != Tok::Eq && op != Tok::Neq && op != Tok::Lt && op != Tok::Le) {
      fail("expected a relation (=, !=, <, <=), found " + describe(peek()));
    }
    ++pos_;
    const Term l = normalize(lhs);
    const Term r = normalize(term(true));
    switch (op) {
      case Tok::Eq:
        return Formula::is_zero(l + r);
      case Tok::Neq:
        return Formula::negation(Formula::is_zero(l + r));
      case Tok::Le:
        return Formula::is_zero(difference(l, r));
      default:
        return Formula::conjunction(Formula::is_zero(difference(l, r)), Formula::negation(Formula::is_zero(l + r)));
    }
  }

  // rhs: stop before top-level lattice & and |, which then act on formulas.
  TermExpr term(bool rhs) {
    TermExpr t = product(rhs);
    while (true) {
      const Tok k = peek().kind;
      TermExpr::Op op;
      if (k == Tok::Plus) op = TermExpr::Op::Plus;
      else if (k == Tok::Minus) op = TermExpr::Op::Minus;
      else if (k == Tok::Bar && !rhs) op = TermExpr::Op::Join;
      else return t;
      ++pos_;
      t = TermExpr::binary(op, std::move(t), product(rhs));
    }
  }

  TermExpr product(bool rhs) {
    TermExpr t = term_unary();
    while (true) {
      const Tok k = peek().kind;
      TermExpr::Op op;
      if (k == Tok::Dot) op = TermExpr::Op::Times;
      else if (k == Tok::Amp && !rhs) op = TermExpr::Op::Meet;
      else return t;
      ++pos_;
      t = TermExpr::binary(op, std::move(t), term_unary());
    }
  }

  TermExpr term_unary() {
    const Token& t = peek();
    switch (t.kind) {
      case Tok::Tilde:
        ++pos_;
        return TermExpr::unary(TermExpr::Op::Not, term_unary());
      case Tok::Ident:
        ++pos_;
        return TermExpr::var(t.text);
      case Tok::Number:
        if (t.text == "0" || t.text == "1") {
          ++pos_;
          return t.text == "0" ? TermExpr::zero() : TermExpr::one();
        }
        fail("only 0 and 1 are term constants, found '" + t.text + "'");
      case Tok::LParen: {
        ++pos_;
        TermExpr inner = term(false);
        expect(Tok::RParen, "')'");
        return inner;
      }
      default:
        fail("expected a term, found " + describe(t));
    }
  }

  std::uint32_t natural(const char* what) {
    const Token& t = peek();
    if (t.kind != Tok::Number) fail(std::string("expected ") + what + ", found " + describe(t));
    std::uint64_t v = 0;
    for (char c : t.text) {
      v = v * 10 + static_cast<std::uint64_t>(c - '0');
      if (v > std::numeric_limits<std::uint32_t>::max()) {
        throw ParseError("E_NUMBER", std::string(what) + " is out of range", t.line, t.column);
      }
    }
    ++pos_;
    return static_cast<std::uint32_t>(v);
  }

  std::vector<Token> toks_;
  std::size_t pos_ = 0;
};

enum Prec { kIff = 1, kImp = 2, kOr = 3, kAnd = 4, kUnary = 5 };

int precedence(const Formula& f) {
  switch (f.kind()) {
    case Formula::Kind::Iff:
      return kIff;
    case Formula::Kind::Implies:
      return kImp;
    case Formula::Kind::Or:
      return kOr;
    case Formula::Kind::And:
      return kAnd;
    default:
      return kUnary;
  }
}

std::string print_atom(const Atom& a) {
  const std::string t = to_string(a.term);
  switch (a.kind) {
    case AtomKind::IsZero:
      return t + " = 0";
    case AtomKind::AtLeast:
      return "C[" + std::to_string(a.index) + "](" + t + ")";
    case AtomKind::Fin:
      return "Fin(" + t + ")";
    case AtomKind::Res:
      return "Res[" + std::to_string(a.modulus) + "," + std::to_string(a.residue) + "](" + t + ")";
  }
  return "?";
}

std::string print_rec(const Formula& f);

std::string operand(const Formula& f, bool parens) {
  std::string s = print_rec(f);
  return parens ? "(" + s + ")" : s;
}

std::string print_rec(const Formula& f) {
  using K = Formula::Kind;
  switch (f.kind()) {
    case K::True:
      return "0 = 0";
    case K::False:
      return "1 = 0";
    case K::Atom:
      return print_atom(f.atom());
    case K::Not: {
      const Formula& g = f.operand(0);
      if (g.kind() == K::True) return "0 != 0";
      if (g.kind() == K::False) return "1 != 0";
      if (g.is_atom()) {
        if (g.atom().kind == AtomKind::IsZero) return to_string(g.atom().term) + " != 0";
        return "~" + print_atom(g.atom());
      }
      if (g.is_quantifier()) return "~" + print_rec(g);
      return "~(" + print_rec(g) + ")";
    }
    case K::Exists:
    case K::Forall: {
      const Formula& b = f.body();
      return std::string(f.kind() == K::Exists ? "E " : "A ") + f.variable() + " " + operand(b, b.is_binary());
    }
    default: {
      const int p = precedence(f);
      const char* op = f.kind() == K::And ? " & " : f.kind() == K::Or ? " | " : f.kind() == K::Implies ? " -> " : " <-> ";
      const Formula& a = f.operand(0);
      const Formula& b = f.operand(1);
      return operand(a, precedence(a) < p || a.is_quantifier()) + op +
             operand(b, precedence(b) <= p || b.is_quantifier());
    }
  }
}

}  // namespace

std::vector<Formula> parse_all(std::string_view text) { return Parser(lex(text)).statements(); }

Formula parse(std::string_view text) {
  auto tokens = lex(text);
  const Token last = tokens.back();
  auto all = Parser(std::move(tokens)).statements();
  if (all.empty()) throw ParseError("E_EMPTY", "no formula in input", last.line, last.column);
  if (all.size() > 1) throw ParseError("E_SYNTAX", "expected a single formula", last.line, last.column);
  return all.front();
}

Term parse_term(std::string_view text) { return Parser(lex(text)).single_term(); }

std::string print(const Formula& f) { return print_rec(f); }

}  // namespace baqe
