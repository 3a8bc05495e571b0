#include <gtest/gtest.h>

#include <random>
#include <set>
#include <tuple>

#include "baqe/model.hpp"
#include "baqe/syntax.hpp"
#include "../support/oracle.hpp"

using namespace baqe;

namespace {

Assignment sigma(const std::string& text) { return parse_assignment(text); }

// Distinct denotations among all raw EPSets within the bounds.
std::size_t brute_candidate_count(std::uint64_t max_t, std::uint64_t max_p) {
  std::set<std::vector<bool>> seen;
  const std::uint64_t window = max_t + 2 * 60;
  for (std::uint64_t t = 0; t <= max_t; ++t) {
    for (std::uint64_t tm = 0; tm < (std::uint64_t{1} << t); ++tm) {
      for (std::uint64_t p = 1; p <= max_p; ++p) {
        for (std::uint64_t rm = 0; rm < (std::uint64_t{1} << p); ++rm) {
          std::vector<bool> bits(window);
          for (std::uint64_t n = 0; n < window; ++n) bits[n] = n < t ? ((tm >> n) & 1u) != 0 : ((rm >> (n % p)) & 1u) != 0;
          seen.insert(std::move(bits));
        }
      }
    }
  }
  return seen.size();
}

}  // namespace

TEST(Model, EvalQfExamples) {
  const Assignment s = sigma("x = EP{transient=[0,1]; T=2; p=1; R=[]}; y = EP{transient=[]; T=0; p=2; R=[0]}");
  EXPECT_TRUE(eval_qf(parse("C[2](x) & ~C[3](x) & Fin(x)"), s));
  EXPECT_TRUE(eval_qf(parse("~Fin(y) & C[100](y)"), s));
  EXPECT_TRUE(eval_qf(parse("C[1](x . y) & ~C[2](x . y)"), s));
  EXPECT_TRUE(eval_qf(parse("Res[2,1](x - y)"), s));
  EXPECT_FALSE(eval_qf(parse("Res[2,1](y)"), s));
  EXPECT_FALSE(eval_qf(parse("x <= y"), s));
  EXPECT_EQ(eval_term(parse_term("x + y"), s), parse_epset("EP{transient=[1]; T=2; p=2; R=[0]}"));
  EXPECT_THROW(eval_qf(parse("C[1](z)"), s), MissingVariable);
  EXPECT_THROW(eval_qf(parse("E z C[1](z)"), s), std::invalid_argument);
  EXPECT_EQ(to_string(Truth::Unknown), "unknown");
}

TEST(Model, Candidates) {
  const auto& all = candidates({});
  EXPECT_EQ(all.size(), brute_candidate_count(8, 6));
  for (std::size_t i = 0; i < all.size(); ++i) {
    EXPECT_LE(all[i].threshold(), 8u);
    EXPECT_LE(all[i].period(), 6u);
    if (i > 0) {
      const auto& a = all[i - 1];
      const auto& b = all[i];
      const auto key = [](const EPSet& e) { return std::make_tuple(e.threshold(), e.period(), e.transient(), e.residues()); };
      ASSERT_LT(key(a), key(b));
    }
  }
  const auto& fc = candidates({8, 6, SamplingMode::FiniteCofinite});
  for (const auto& e : fc) ASSERT_TRUE(e.is_finite() || e.is_cofinite());
  EXPECT_EQ(fc.size(), brute_candidate_count(8, 1));
}

TEST(Model, WitnessExamples) {
  const auto w = witness_search(parse("E x (C[2](x) & ~C[3](x) & Res[2,0](x))"), {}, {});
  ASSERT_TRUE(w.has_value());
  EXPECT_EQ(to_string(*w), "EP{transient=[0,1]; T=2; p=1; R=[]}");
  EXPECT_FALSE(witness_search(parse("E x (Fin(x) & ~Fin(x))"), {}, {}).has_value());
  // An infinite coinfinite set is found.
  const auto inf = witness_search(parse("E x (~Fin(x) & ~Fin(1 + x))"), {}, {});
  ASSERT_TRUE(inf.has_value());
  EXPECT_FALSE(inf->is_finite() || inf->is_cofinite());
  // Only finite and cofinite sets: no witness.
  EXPECT_FALSE(witness_search(parse("E x (~Fin(x) & ~Fin(1 + x))"), {}, {8, 6, SamplingMode::FiniteCofinite}));
}

TEST(Model, BoundedEvaluation) {
  const SearchBounds small{4, 2, SamplingMode::All};
  EXPECT_EQ(eval_bounded(parse("E x C[3](x)"), {}, small), Truth::True);
  EXPECT_EQ(eval_bounded(parse("E x (C[30](x) & ~C[31](x))"), {}, small), Truth::Unknown);
  EXPECT_EQ(eval_bounded(parse("A x Fin(x)"), {}, small), Truth::False);
  EXPECT_EQ(eval_bounded(parse("A x (x = 0 | C[1](x))"), {}, small), Truth::Unknown);
  EXPECT_EQ(eval_bounded(parse("~A x Fin(x)"), {}, small), Truth::True);
  EXPECT_EQ(eval_bounded(parse("C[1](y)"), sigma("y = EP{transient=[]; T=0; p=1; R=[0]}"), small), Truth::True);
}

// Bounded evaluation of a quantifier-free formula is plain evaluation.
TEST(Model, BoundedAgreesOnQuantifierFree) {
  std::mt19937_64 rng(91);
  for (int i = 0; i < 500; ++i) {
    const Assignment s{{"x", oracle::random_epset(rng)}, {"y", oracle::random_epset(rng)}};
    const Formula f = parse("Res[3,1](x + y) | C[4](x . y) & ~Fin(x)");
    ASSERT_EQ(eval_bounded(f, s, {}), truth_of(eval_qf(f, s)));
  }
}

TEST(Model, CardAndResidueExamples) {
  EXPECT_EQ(card(EPSet::finite({1, 3, 5})), Cardinal::finite(3));
  EXPECT_EQ(card(EPSet::progression(0, 2)), Cardinal::omega());
  EXPECT_EQ(residue(EPSet::finite({0, 1}), 2), 0u);
  EXPECT_EQ(residue(EPSet::progression(0, 2), 2), std::nullopt);
  EXPECT_FALSE(eval_qf(parse("Fin(x)"), {{"x", EPSet::progression(0, 2)}}));
  EXPECT_TRUE(eval_qf(parse("Res[2,0](x)"), {{"x", EPSet::finite({0, 1})}}));
  EXPECT_TRUE(eval_qf(parse("C[3](x | y)"), {{"x", EPSet::finite({0})}, {"y", EPSet::finite({5, 9})}}));
}

namespace {

TermExpr random_lattice(std::mt19937_64& rng, int depth) {
  using Op = TermExpr::Op;
  static const char* names[] = {"x", "y", "z"};
  if (depth == 0 || oracle::below(rng, 4) == 0) {
    const auto r = oracle::below(rng, 8);
    if (r == 0) return TermExpr::zero();
    if (r == 1) return TermExpr::one();
    return TermExpr::var(names[r % 3]);
  }
  switch (oracle::below(rng, 3)) {
    case 0:
      return TermExpr::unary(Op::Not, random_lattice(rng, depth - 1));
    case 1:
      return TermExpr::binary(Op::Meet, random_lattice(rng, depth - 1), random_lattice(rng, depth - 1));
    default:
      return TermExpr::binary(Op::Join, random_lattice(rng, depth - 1), random_lattice(rng, depth - 1));
  }
}

}  // namespace

// A lattice expression and its ring polynomial denote the same set.
TEST(Model, DictionaryAgreesOnSets) {
  std::mt19937_64 rng(92);
  for (int i = 0; i < 500; ++i) {
    const TermExpr e = random_lattice(rng, 4);
    const Assignment s{{"x", oracle::random_epset(rng)}, {"y", oracle::random_epset(rng)}, {"z", oracle::random_epset(rng)}};
    const EPSet value = eval_term(from_lattice(e), s);
    for (std::uint64_t n = 0; n < 8 + 2 * 60; ++n) {
      const std::map<std::string, bool> pt{
          {"x", oracle::member(s.at("x"), n)}, {"y", oracle::member(s.at("y"), n)}, {"z", oracle::member(s.at("z"), n)}};
      ASSERT_EQ(oracle::member(value, n), oracle::eval_expr(e, pt));
    }
  }
}

// Evaluated minterms are pairwise disjoint and cover everything.
TEST(Model, MintermsPartitionSets) {
  std::mt19937_64 rng(93);
  const VarList vars{"x", "y", "z"};
  for (int i = 0; i < 300; ++i) {
    const Assignment s{{"x", oracle::random_epset(rng)}, {"y", oracle::random_epset(rng)}, {"z", oracle::random_epset(rng)}};
    EPSet all;
    for (Minterm m = 0; m < 8; ++m) {
      const EPSet a = eval_term(minterm_term(m, vars), s);
      ASSERT_EQ(set_intersection(all, a), EPSet());
      all = set_union(all, a);
    }
    ASSERT_EQ(all, EPSet::full());
  }
}

TEST(Model, RingLawsOnSets) {
  std::mt19937_64 rng(94);
  for (int i = 0; i < 1000; ++i) {
    const EPSet a = oracle::random_epset(rng);
    const EPSet b = oracle::random_epset(rng);
    const EPSet c = oracle::random_epset(rng);
    ASSERT_EQ(ring_sum(a, ring_sum(b, c)), ring_sum(ring_sum(a, b), c));
    ASSERT_EQ(ring_product(a, ring_sum(b, c)), ring_sum(ring_product(a, b), ring_product(a, c)));
    ASSERT_EQ(ring_sum(a, a), EPSet());
    ASSERT_EQ(ring_product(a, a), a);
    ASSERT_EQ(ring_sum(a, EPSet::full()), a.complement());
  }
}

TEST(Model, MainAxiomWitnessForEvens) {
  const Formula f = parse("E y (y < x & ~Fin(y) & ~Fin(x - y))");
  const auto w = witness_search(f, {{"x", EPSet::progression(0, 2)}}, {});
  ASSERT_TRUE(w.has_value());
  EXPECT_EQ(*w, EPSet::progression(0, 4));
}

// Every sampled infinite set splits into two infinite parts within the bounds.
TEST(Model, MainAxiomWitnessedConstructively) {
  const Formula f = parse("E y (y < x & ~Fin(y) & ~Fin(x - y))");
  EPSampler sampler(95);
  const SearchBounds draw{8, 3, SamplingMode::All};
  int infinite = 0;
  for (int i = 0; i < 60; ++i) {
    const EPSet x = sampler.next(draw);
    if (x.is_finite()) continue;
    ++infinite;
    const SearchBounds search{static_cast<std::uint32_t>(x.threshold()), static_cast<std::uint32_t>(2 * x.period()),
                              SamplingMode::All};
    const auto w = witness_search(f, {{"x", x}}, search);
    ASSERT_TRUE(w.has_value()) << to_string(x);
    ASSERT_TRUE(eval_qf(parse("y < x & ~Fin(y) & ~Fin(x - y)"), {{"x", x}, {"y", *w}}));
  }
  EXPECT_GT(infinite, 20);
}
