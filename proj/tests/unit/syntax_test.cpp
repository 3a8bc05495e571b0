#include <gtest/gtest.h>

#include "baqe/harness.hpp"
#include "baqe/syntax.hpp"

using namespace baqe;

namespace {

std::string code_of(const std::string& text) {
  try {
    parse(text);
  } catch (const ParseError& e) {
    return e.code();
  }
  return "";
}

}  // namespace

TEST(Syntax, Atoms) {
  EXPECT_EQ(parse("Fin(1)"), Formula::fin(Term::one()));
  EXPECT_EQ(print(parse("Res[3,2](x)")), "Res[3,2](x)");
  EXPECT_EQ(print(parse("C[2](x & y)")), "C[2](x . y)");
  EXPECT_EQ(print(parse("x != 0")), "x != 0");
}

TEST(Syntax, MainAxiomSugar) {
  const Formula f = parse("A x (~Fin(x) -> E y (y < x & ~Fin(y) & ~Fin(x - y)))");
  EXPECT_TRUE(f.is_sentence());
  EXPECT_EQ(f.level(), Level::L2);
  // y < x is y . x = y together with y != x.
  const Formula expected = parse("A x (~Fin(x) -> E y (y . x = y & y != x & ~Fin(y) & ~Fin(x + x . y)))");
  EXPECT_EQ(f, expected);
}

TEST(Syntax, Precedence) {
  EXPECT_EQ(parse("x = 0 & y = 0 | C[1](z)"), parse("(x = 0 & y = 0) | C[1](z)"));
  EXPECT_EQ(parse("C[1](x) -> C[1](y) -> C[1](z)"), parse("(C[1](x) -> C[1](y)) -> C[1](z)"));
  EXPECT_EQ(parse("~C[1](x) & C[1](y)"), parse("(~C[1](x)) & C[1](y)"));
  // A quantifier scopes over one unary formula.
  EXPECT_EQ(parse("E x C[1](x) & C[1](y)"), parse("(E x C[1](x)) & C[1](y)"));
  EXPECT_EQ(parse("x . y + z = 0"), parse("(x . y) + z = 0"));
}

TEST(Syntax, ParenthesizedTermOrFormula) {
  EXPECT_EQ(parse("(x + y) = 0"), parse("x + y = 0"));
  EXPECT_EQ(parse("(x = 0)"), parse("x = 0"));
  EXPECT_EQ(parse("C[1]((1 + x) . y)"), parse("C[1](y - x)"));
}

TEST(Syntax, ErrorCodes) {
  EXPECT_EQ(code_of(""), "E_EMPTY");
  EXPECT_EQ(code_of("  # only a comment"), "E_EMPTY");
  EXPECT_EQ(code_of("x = $"), "E_LEXICAL");
  EXPECT_EQ(code_of("x = "), "E_SYNTAX");
  EXPECT_EQ(code_of("C[0](x)"), "E_C_INDEX");
  EXPECT_EQ(code_of("Res[0,1](x)"), "E_RES_MODULUS");
  EXPECT_EQ(code_of("C[99999999999999999999](x)"), "E_NUMBER");
  EXPECT_EQ(code_of("x = 0 y = 0"), "E_SYNTAX");
}

TEST(Syntax, ErrorLocation) {
  try {
    parse("x = 0 &\n  $");
    FAIL();
  } catch (const ParseError& e) {
    EXPECT_EQ(e.line(), 2u);
    EXPECT_EQ(e.column(), 3u);
  }
}

TEST(Syntax, ParseAll) {
  const auto fs = parse_all("Fin(1); # comment\nC[1](1);\n");
  ASSERT_EQ(fs.size(), 2u);
  EXPECT_EQ(fs[1], parse("C[1](1)"));
}

TEST(Syntax, ParseTerm) {
  EXPECT_EQ(parse_term("~x | y"), Term::one() + Term::variable("x") + Term::variable("x") * Term::variable("y"));
}

// print then parse gives back the same formula.
TEST(Syntax, RoundTrip) {
  FormulaGenerator gen(21);
  RandomFormulaSpec spec;
  spec.max_size = 16;
  for (int i = 0; i < 1000; ++i) {
    const Formula f = gen.next(spec);
    const std::string text = print(f);
    ASSERT_EQ(parse(text), f) << text;
    ASSERT_EQ(print(parse(text)), text);
  }
}
