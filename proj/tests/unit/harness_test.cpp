#include <gtest/gtest.h>

#include <algorithm>
#include <set>

#include "baqe/harness.hpp"
#include "baqe/model.hpp"
#include "baqe/syntax.hpp"

using namespace baqe;

namespace {

bool has_sentence(const std::vector<AxiomInstance>& axioms, const std::string& text) {
  const Formula f = parse(text);
  return std::any_of(axioms.begin(), axioms.end(), [&](const AxiomInstance& a) { return a.sentence == f; });
}

std::set<std::string> printed(const std::vector<Formula>& fs) {
  std::set<std::string> out;
  for (const auto& f : fs) out.insert(print(f));
  return out;
}

}  // namespace

TEST(Harness, AxiomInstances) {
  const auto t2 = generate_axioms({TheoryLevel::T2, 8});
  EXPECT_TRUE(has_sentence(t2, "A x (~C[3](x) -> Fin(x))"));
  EXPECT_TRUE(has_sentence(t2, "A x (~Fin(x) -> E y (y < x & ~Fin(y) & ~Fin(x - y)))"));
  EXPECT_FALSE(has_sentence(t2, "Res[2,0](0)"));
  const auto t3 = generate_axioms({TheoryLevel::T3, 8});
  EXPECT_TRUE(has_sentence(t3, "Res[5,0](0)"));
  EXPECT_GT(t3.size(), t2.size());
  for (const auto& a : t3) {
    ASSERT_TRUE(a.sentence.is_sentence()) << a.family;
    ASSERT_FALSE(a.family.empty());
  }
  std::set<std::string> families;
  for (const auto& a : t3) families.insert(a.family.substr(0, 3));
  EXPECT_EQ(families, (std::set<std::string>{"T1.", "T2.", "T3."}));
}

TEST(Harness, AxiomsAreDeterministicAndUnique) {
  const auto a = generate_axioms({TheoryLevel::T3, 4});
  const auto b = generate_axioms({TheoryLevel::T3, 4});
  ASSERT_EQ(a.size(), b.size());
  std::set<std::string> seen;
  for (std::size_t i = 0; i < a.size(); ++i) {
    ASSERT_EQ(a[i].sentence, b[i].sentence);
    ASSERT_TRUE(seen.insert(print(a[i].sentence)).second) << print(a[i].sentence);
  }
}

TEST(Harness, SmallAxiomSuiteHolds) {
  Engine engine;
  for (const auto& a : generate_axioms({TheoryLevel::T3, 3})) {
    ASSERT_TRUE(engine.decide(a.sentence).value) << a.family << ": " << print(a.sentence);
  }
}

TEST(Harness, SurfaceSize) {
  EXPECT_EQ(surface_size(parse("x = 1")), 3u);
  EXPECT_EQ(surface_size(parse("C[2](~x)")), 3u);
  EXPECT_EQ(surface_size(parse("x <= y")), 3u);
  EXPECT_EQ(surface_size(parse("C[1](x)")), 2u);
  EXPECT_EQ(surface_size(parse("~C[1](x) & Fin(x)")), 6u);
  EXPECT_EQ(surface_size(parse("E y C[1](x . y)")), 5u);
}

TEST(Harness, EnumerationSmall) {
  EnumerationSpec spec;
  spec.size = 3;
  const auto fs = enumerate_formulas(spec);
  const auto names = printed(fs);
  EXPECT_EQ(names.size(), fs.size());
  for (const char* text : {"C[1](x)", "C[1](x + 1)", "x = 0", "x = 1", "~C[2](x)"}) {
    EXPECT_TRUE(names.count(print(parse(text)))) << text;
  }
  for (std::size_t i = 1; i < fs.size(); ++i) ASSERT_LE(surface_size(fs[i - 1]), surface_size(fs[i]));
  for (const auto& f : fs) {
    ASSERT_LE(surface_size(f), 3u);
    ASSERT_EQ(f.level(), Level::L1);
  }
}

TEST(Harness, EnumerationRespectsVocabulary) {
  EnumerationSpec spec;
  spec.level = Level::L3;
  spec.size = 4;
  spec.res_moduli = {3};
  spec.allow_fin = false;
  bool res = false;
  for (const auto& f : enumerate_formulas(spec)) {
    const std::string s = print(f);
    ASSERT_EQ(s.find("Fin"), std::string::npos) << s;
    ASSERT_EQ(s.find("Res[2"), std::string::npos) << s;
    res = res || s.find("Res[3,") != std::string::npos;
  }
  EXPECT_TRUE(res);
}

TEST(Harness, Defcheck) {
  const auto hit = defcheck(parse("~C[1](x)"), std::vector<Formula>{parse("C[2](x)"), parse("x = 0")});
  EXPECT_TRUE(hit.definable);
  EXPECT_EQ(hit.checked, 2u);
  EXPECT_EQ(*hit.definition, parse("x = 0"));
  const auto miss = defcheck(parse("Fin(x)"), std::vector<Formula>{parse("C[2](x)")});
  EXPECT_FALSE(miss.definable);
  EXPECT_EQ(miss.checked, 1u);

  EnumerationSpec spec;
  spec.level = Level::L3;
  spec.size = 5;
  spec.res_moduli = {4};
  spec.allow_fin = false;
  const auto res = defcheck(parse("Res[2,1](x)"), spec);
  ASSERT_TRUE(res.definable);
  EXPECT_TRUE(Engine().equivalent(*res.definition, parse("Res[2,1](x)")));
}

TEST(Harness, GeneratorIsDeterministic) {
  FormulaGenerator a(5), b(5);
  RandomFormulaSpec spec;
  spec.sentence = true;
  for (int i = 0; i < 200; ++i) {
    const Formula f = a.next(spec);
    ASSERT_EQ(f, b.next(spec));
    ASSERT_TRUE(f.is_sentence());
    ASSERT_LE(f.size(), spec.max_size);
    ASSERT_LE(f.quantifier_depth(), spec.max_quantifier_depth);
  }
}

// No axiom instance is refuted by bounded search over small EP sets.
TEST(Harness, AxiomsNotRefutedInModel) {
  const SearchBounds bounds{4, 3, SamplingMode::All};
  for (const auto& a : generate_axioms({TheoryLevel::T3, 4})) {
    ASSERT_NE(eval_bounded(a.sentence, {}, bounds), Truth::False) << a.family << ": " << print(a.sentence);
  }
}

TEST(Harness, EnumerationSkipsRepeatedOperands) {
  EnumerationSpec spec;
  spec.size = 5;
  for (const auto& f : enumerate_formulas(spec)) {
    if (f.is_binary()) {
      ASSERT_NE(f.operand(0), f.operand(1)) << print(f);
    }
  }
}

TEST(Harness, DefcheckTrivialAndMonotone) {
  const auto self = defcheck(parse("Fin(x)"), std::vector<Formula>{parse("C[1](x)"), parse("Fin(x)")});
  ASSERT_TRUE(self.definable);
  EXPECT_EQ(*self.definition, parse("Fin(x)"));

  EnumerationSpec spec;
  spec.level = Level::L3;
  spec.res_moduli = {4};
  spec.allow_fin = false;
  for (std::size_t size = 5; size <= 6; ++size) {
    spec.size = size;
    EXPECT_TRUE(defcheck(parse("Res[2,1](x)"), spec).definable) << size;
  }
}
