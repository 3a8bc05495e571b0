#include <gtest/gtest.h>

#include <random>

#include "baqe/minterm.hpp"
#include "baqe/model.hpp"
#include "baqe/syntax.hpp"
#include "../support/oracle.hpp"

using namespace baqe;

namespace {

// Thresholds <= 8 and periods <= 6: past 8 everything repeats with period 60.
constexpr std::uint64_t kT = 8;
constexpr std::uint64_t kL = 60;

Cardinal minterm_card(Minterm m, const VarList& vars, const Assignment& sigma) {
  auto in = [&](std::uint64_t n) {
    for (std::size_t i = 0; i < vars.size(); ++i) {
      if (oracle::member(sigma.at(vars[i]), n) != (((m >> i) & 1u) != 0)) return false;
    }
    return true;
  };
  for (std::uint64_t n = kT; n < kT + kL; ++n) {
    if (in(n)) return Cardinal::omega();
  }
  std::uint64_t c = 0;
  for (std::uint64_t n = 0; n < kT; ++n) c += in(n);
  return Cardinal::finite(c);
}

}  // namespace

TEST(Minterm, DecomposeExamples) {
  const VarList xy{"x", "y"};
  const auto fin = decompose(parse("Fin(x | y)"), xy);
  EXPECT_EQ(fin.minterms, (std::vector<Minterm>{1, 2, 3}));
  EXPECT_EQ(fin.atom.kind, AtomKind::Fin);

  const auto c1 = decompose(parse("C[1](0)"), xy);
  EXPECT_TRUE(c1.minterms.empty());
  EXPECT_FALSE(c1.holds(std::vector<Cardinal>(4, Cardinal::omega())));

  const auto res = decompose(parse("Res[2,1](x)"), VarList{"x"});
  EXPECT_EQ(res.minterms, (std::vector<Minterm>{1}));
  EXPECT_TRUE(res.holds({Cardinal::omega(), Cardinal::finite(3)}));
  EXPECT_FALSE(res.holds({Cardinal::omega(), Cardinal::finite(4)}));
  EXPECT_FALSE(res.holds({Cardinal::finite(1), Cardinal::omega()}));
}

TEST(Minterm, Errors) {
  EXPECT_THROW(decompose(parse("C[1](x) & C[1](y)"), VarList{"x", "y"}), std::invalid_argument);
  EXPECT_THROW(decompose(parse("C[1](z)"), VarList{"x"}), std::invalid_argument);
}

TEST(Minterm, CardinalArithmetic) {
  EXPECT_EQ(Cardinal::finite(2) + Cardinal::finite(3), Cardinal::finite(5));
  EXPECT_EQ(Cardinal::finite(2) + Cardinal::omega(), Cardinal::omega());
  EXPECT_EQ(to_string(Cardinal::omega()), "inf");
}

// The minterms of a variable list partition the top element.
TEST(Minterm, Partition) {
  for (std::size_t k = 0; k <= 4; ++k) {
    VarList vars;
    for (std::size_t i = 0; i < k; ++i) vars.push_back(std::string(1, static_cast<char>('a' + i)));
    Term total;
    for (Minterm m = 0; m < minterm_count(vars); ++m) {
      for (Minterm n = m + 1; n < minterm_count(vars); ++n) {
        ASSERT_TRUE((minterm_term(m, vars) * minterm_term(n, vars)).is_zero());
      }
      total = total + minterm_term(m, vars);
    }
    ASSERT_TRUE(total.is_one());
  }
}

TEST(Minterm, MintermsBelowMatchesPointEvaluation) {
  std::mt19937_64 rng(31);
  const VarList vars{"x", "y", "z"};
  for (int i = 0; i < 1000; ++i) {
    const Term t = normalize(oracle::random_expr(rng, vars, 3));
    std::vector<Minterm> expect;
    for (Minterm m = 0; m < 8; ++m) {
      const std::map<std::string, bool> pt{{"x", (m & 1u) != 0}, {"y", (m & 2u) != 0}, {"z", (m & 4u) != 0}};
      if (oracle::eval_poly(t, pt)) expect.push_back(m);
      ASSERT_EQ(term_at(t, m, vars), oracle::eval_poly(t, pt));
    }
    ASSERT_EQ(minterms_below(t, vars), expect);
  }
}

// An atom holds under an assignment iff its decomposition holds on the
// minterm counts of that assignment.
TEST(Minterm, DecompositionAgreesWithSets) {
  std::mt19937_64 rng(32);
  const VarList vars{"x", "y"};
  for (int i = 0; i < 1000; ++i) {
    const Term t = normalize(oracle::random_expr(rng, vars, 3));
    Atom a;
    switch (oracle::below(rng, 4)) {
      case 0:
        a = {AtomKind::IsZero, 0, 0, 0, t};
        break;
      case 1:
        a = {AtomKind::AtLeast, static_cast<std::uint32_t>(1 + oracle::below(rng, 6)), 0, 0, t};
        break;
      case 2:
        a = {AtomKind::Fin, 0, 0, 0, t};
        break;
      default: {
        const auto n = static_cast<std::uint32_t>(1 + oracle::below(rng, 5));
        a = {AtomKind::Res, 0, n, static_cast<std::uint32_t>(oracle::below(rng, n)), t};
      }
    }
    const Assignment sigma{{"x", oracle::random_epset(rng)}, {"y", oracle::random_epset(rng)}};
    std::vector<Cardinal> cards;
    for (Minterm m = 0; m < 4; ++m) cards.push_back(minterm_card(m, vars, sigma));
    // Atoms about constants fold to truth values.
    if (!Formula::atom(a).is_atom()) continue;
    const auto mc = decompose(Formula::atom(a), vars);
    ASSERT_EQ(mc.holds(cards), eval_atom(a, sigma)) << print(Formula::atom(a));
  }
}
