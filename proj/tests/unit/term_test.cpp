#include <gtest/gtest.h>

#include <random>

#include "baqe/syntax.hpp"
#include "baqe/term.hpp"
#include "../support/oracle.hpp"

using namespace baqe;

namespace {

const std::vector<std::string> kVars{"x", "y", "z"};

std::map<std::string, bool> point(unsigned bits) {
  return {{"x", (bits & 1u) != 0}, {"y", (bits & 2u) != 0}, {"z", (bits & 4u) != 0}};
}

Term v(const char* name) { return Term::variable(name); }

}  // namespace

TEST(Term, DictionaryExamples) {
  using Op = TermExpr::Op;
  EXPECT_EQ(from_lattice(TermExpr::unary(Op::Not, TermExpr::var("x"))), Term::one() + v("x"));
  EXPECT_EQ(from_lattice(TermExpr::binary(Op::Join, TermExpr::var("x"), TermExpr::var("x"))), v("x"));
  EXPECT_EQ(from_lattice(TermExpr::binary(Op::Join, TermExpr::var("x"), TermExpr::var("y"))),
            v("x") + v("y") + v("x") * v("y"));
  EXPECT_THROW(from_lattice(TermExpr::binary(Op::Plus, TermExpr::var("x"), TermExpr::var("y"))),
               std::invalid_argument);
}

TEST(Term, CharacteristicTwo) {
  EXPECT_TRUE((v("x") + v("x")).is_zero());
  EXPECT_TRUE((v("x") * (Term::one() + v("x"))).is_zero());
  EXPECT_EQ(v("x") * v("x"), v("x"));
}

TEST(Term, Printing) {
  EXPECT_EQ(to_string(v("x") * v("y") + v("x") + Term::one()), "x . y + x + 1");
  EXPECT_EQ(to_string(Term::zero()), "0");
  EXPECT_EQ(to_string(Term::one()), "1");
}

// Normal form computes the same Boolean function as the expression.
TEST(Term, NormalizeAgreesWithTruthTables) {
  std::mt19937_64 rng(11);
  for (int i = 0; i < 1000; ++i) {
    const TermExpr e = oracle::random_expr(rng, kVars, 4);
    const Term t = normalize(e);
    for (unsigned b = 0; b < 8; ++b) {
      ASSERT_EQ(oracle::eval_poly(t, point(b)), oracle::eval_expr(e, point(b))) << to_string(t);
    }
  }
}

// Equal functions have equal normal forms.
TEST(Term, NormalFormIsCanonical) {
  std::mt19937_64 rng(12);
  for (int i = 0; i < 1000; ++i) {
    const TermExpr a = oracle::random_expr(rng, kVars, 3);
    const TermExpr b = oracle::random_expr(rng, kVars, 3);
    bool same = true;
    for (unsigned p = 0; p < 8; ++p) same = same && oracle::eval_expr(a, point(p)) == oracle::eval_expr(b, point(p));
    ASSERT_EQ(same, normalize(a) == normalize(b));
  }
}

TEST(Term, RingLaws) {
  std::mt19937_64 rng(13);
  for (int i = 0; i < 1000; ++i) {
    const Term a = normalize(oracle::random_expr(rng, kVars, 3));
    const Term b = normalize(oracle::random_expr(rng, kVars, 3));
    const Term c = normalize(oracle::random_expr(rng, kVars, 3));
    ASSERT_EQ(a + b, b + a);
    ASSERT_EQ(a * b, b * a);
    ASSERT_EQ((a + b) + c, a + (b + c));
    ASSERT_EQ((a * b) * c, a * (b * c));
    ASSERT_EQ(a * (b + c), a * b + a * c);
    ASSERT_EQ(a + Term::zero(), a);
    ASSERT_EQ(a * Term::one(), a);
    ASSERT_TRUE((a + a).is_zero());
    ASSERT_EQ(a * a, a);
    ASSERT_EQ(join(a, meet(a, b)), a);
    ASSERT_EQ(difference(a, b), a * b.complement());
  }
}

TEST(Term, SubstituteMatchesComposition) {
  std::mt19937_64 rng(14);
  for (int i = 0; i < 300; ++i) {
    const TermExpr e = oracle::random_expr(rng, kVars, 3);
    const TermExpr r = oracle::random_expr(rng, {"y", "z"}, 2);
    const Term s = normalize(e).substitute("x", normalize(r));
    for (unsigned p = 0; p < 8; ++p) {
      auto pt = point(p);
      pt["x"] = oracle::eval_expr(r, pt);
      ASSERT_EQ(oracle::eval_poly(s, point(p)), oracle::eval_expr(e, pt));
    }
  }
}

TEST(Term, Variables) {
  EXPECT_EQ((v("y") * v("x") + v("z")).variables(), (std::vector<std::string>{"x", "y", "z"}));
  EXPECT_TRUE((v("x") + v("y")).mentions("y"));
  EXPECT_FALSE((v("x") + v("x")).mentions("x"));
}
