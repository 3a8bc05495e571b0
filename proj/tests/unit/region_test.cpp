#include <gtest/gtest.h>

#include <random>

#include "baqe/harness.hpp"
#include "baqe/model.hpp"
#include "baqe/region.hpp"
#include "baqe/syntax.hpp"
#include "../support/oracle.hpp"

using namespace baqe;

namespace {

bool in_region(const Region& r, const std::vector<Cardinal>& cards) {
  for (const auto& cell : r.cells()) {
    bool all = true;
    for (std::size_t m = 0; m < cards.size() && all; ++m) all = cell[m].contains(cards[m]);
    if (all) return true;
  }
  return false;
}

RandomFormulaSpec qf_spec() {
  RandomFormulaSpec spec;
  spec.free_vars = {"a", "b"};
  spec.max_quantifier_depth = 0;
  spec.max_size = 14;
  return spec;
}

}  // namespace

TEST(Region, Realizable) {
  EXPECT_TRUE(realizable({CardSet::exactly(2), CardSet::infinite()}));
  EXPECT_FALSE(realizable({CardSet::exactly(2), CardSet::at_least(0) - CardSet::infinite()}));
  EXPECT_FALSE(realizable({CardSet::empty(), CardSet::universe()}));
}

TEST(Region, UniverseAndEmpty) {
  EXPECT_TRUE(Region::universe(2).is_universe());
  EXPECT_TRUE(Region(2).is_empty());
  EXPECT_TRUE(Region::universe(1).complement().is_empty());
  EXPECT_TRUE(compile(parse("C[1](a) | a = 0"), {"a"}).is_universe());
  EXPECT_TRUE(compile(parse("Fin(a) & Fin(1 + a)"), {"a"}).is_empty());
}

// A tuple of counts is in compile(f) iff f holds of sets with those counts.
TEST(Region, CompileMatchesModel) {
  std::mt19937_64 rng(61);
  FormulaGenerator gen(62);
  const VarList vars{"a", "b"};
  for (int i = 0; i < 300; ++i) {
    const Formula f = gen.next(qf_spec());
    const Region pos = compile(f, vars);
    const Region neg = compile(f, vars, false);
    for (int j = 0; j < 20; ++j) {
      const Assignment sigma{{"a", oracle::random_epset(rng)}, {"b", oracle::random_epset(rng)}};
      const auto cards = oracle::minterm_cards(vars, sigma);
      const bool truth = eval_qf(f, sigma);
      ASSERT_EQ(in_region(pos, cards), truth) << print(f) << "\n" << to_string(sigma);
      ASSERT_EQ(in_region(neg, cards), !truth) << print(f);
    }
  }
}

TEST(Region, OperationsArePointwise) {
  std::mt19937_64 rng(63);
  FormulaGenerator gen(64);
  const VarList vars{"a", "b"};
  for (int i = 0; i < 200; ++i) {
    const Region r = compile(gen.next(qf_spec()), vars);
    const Region s = compile(gen.next(qf_spec()), vars);
    Region simplified = r.unite(s);
    simplified.simplify();
    for (int j = 0; j < 20; ++j) {
      const Assignment sigma{{"a", oracle::random_epset(rng)}, {"b", oracle::random_epset(rng)}};
      const auto cards = oracle::minterm_cards(vars, sigma);
      const bool x = in_region(r, cards);
      const bool y = in_region(s, cards);
      ASSERT_EQ(in_region(r.intersect(s), cards), x && y);
      ASSERT_EQ(in_region(r.unite(s), cards), x || y);
      ASSERT_EQ(in_region(simplified, cards), x || y);
      ASSERT_EQ(in_region(r.complement(), cards), !x);
    }
  }
}

// to_formula gives back a formula with the same region.
TEST(Region, ToFormulaRoundTrip) {
  std::mt19937_64 rng(65);
  FormulaGenerator gen(66);
  const VarList vars{"a", "b"};
  for (int i = 0; i < 200; ++i) {
    const Formula f = gen.next(qf_spec());
    const Formula g = to_formula(compile(f, vars), vars);
    ASSERT_TRUE(g.is_quantifier_free());
    for (int j = 0; j < 20; ++j) {
      const Assignment sigma{{"a", oracle::random_epset(rng)}, {"b", oracle::random_epset(rng)}};
      ASSERT_EQ(eval_qf(g, sigma), eval_qf(f, sigma)) << print(f) << "  vs  " << print(g);
    }
  }
}

// Projecting b: the counts of a are those of some a, b pair in the region.
TEST(Region, ProjectLast) {
  const VarList ab{"a", "b"};
  // Some b below a with exactly two atoms: a has at least two.
  const Region r = compile(parse("b . a = b & C[2](b) & ~C[3](b)"), ab).project_last();
  EXPECT_EQ(r.var_count(), 1u);
  const Region expect = compile(parse("C[2](a)"), {"a"});
  EXPECT_TRUE(r.intersect(expect.complement()).is_empty());
  EXPECT_TRUE(expect.intersect(r.complement()).is_empty());
}
