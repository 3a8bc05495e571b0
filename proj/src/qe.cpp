#include "baqe/qe.hpp"

#include "baqe/region.hpp"
#include "baqe/syntax.hpp"

namespace baqe {

std::string to_string(TheoryLevel t) { return "T" + std::to_string(static_cast<int>(t)); }

std::optional<TheoryLevel> parse_theory(const std::string& name) {
  if (name == "T1") return TheoryLevel::T1;
  if (name == "T2") return TheoryLevel::T2;
  if (name == "T3") return TheoryLevel::T3;
  return std::nullopt;
}

bool evaluate_closed(const Formula& f) {
  using K = Formula::Kind;
  switch (f.kind()) {
    case K::True:
      return true;
    case K::False:
      return false;
    case K::Atom: {
      const Atom& a = f.atom();
      if (!a.term.is_constant()) throw std::invalid_argument("evaluate_closed: atom has variables");
      const bool top = a.term.is_one();
      switch (a.kind) {
        case AtomKind::IsZero:
          return !top;
        case AtomKind::AtLeast:
          return top;  // the top element has infinitely many atoms
        case AtomKind::Fin:
          return !top;
        case AtomKind::Res:
          return !top && a.residue == 0;
      }
      return false;
    }
    case K::Not:
      return !evaluate_closed(f.operand(0));
    case K::And:
      return evaluate_closed(f.operand(0)) && evaluate_closed(f.operand(1));
    case K::Or:
      return evaluate_closed(f.operand(0)) || evaluate_closed(f.operand(1));
    case K::Implies:
      return !evaluate_closed(f.operand(0)) || evaluate_closed(f.operand(1));
    case K::Iff:
      return evaluate_closed(f.operand(0)) == evaluate_closed(f.operand(1));
    default:
      throw std::invalid_argument("evaluate_closed: formula has quantifiers");
  }
}

void Engine::check_level(const Formula& f) const {
  if (!admits(level_, f.level())) {
    throw LevelError("formula uses " + to_string(f.level()) + " vocabulary, above theory " + to_string(level_));
  }
}

void Engine::note(const std::string& line) {
  if (tracing_) trace_.push_back(line);
}

Formula Engine::eliminate(const Formula& f) {
  using K = Formula::Kind;
  if (f.is_quantifier_free()) return f;
  switch (f.kind()) {
    case K::Not:
      return Formula::negation(eliminate(f.operand(0)));
    case K::Exists:
    case K::Forall: {
      // Innermost first: a closed or narrow inner block is settled over its
      // own variables instead of the outer block's.
      const Formula flat = Formula::quantifier(f.kind(), f.variable(), eliminate(f.body()));
      const VarList vars = flat.free_variables();
      const Region region = compile(flat, vars);
      Formula out = to_formula(region, vars);
      if (tracing_) {
        note("eliminate " + print(f));
        note("  region over [" + [&] {
          std::string s;
          for (const auto& v : vars) s += (s.empty() ? "" : ",") + v;
          return s;
        }() + "]: " + std::to_string(region.cells().size()) + " cell(s)");
        note("  result " + print(out));
      }
      return out;
    }
    default:
      return Formula::binary(f.kind(), eliminate(f.operand(0)), eliminate(f.operand(1)));
  }
}

Formula Engine::eliminate_one(const Formula& f) {
  if (!f.is_quantifier() || !f.body().is_quantifier_free()) {
    throw std::invalid_argument("eliminate_one: expected a quantifier over a quantifier-free body");
  }
  check_level(f);
  trace_.clear();
  return eliminate(f);
}

Formula Engine::eliminate_all(const Formula& f) {
  check_level(f);
  trace_.clear();
  return eliminate(f);
}

Verdict Engine::decide(const Formula& sentence) {
  if (!sentence.is_sentence()) throw std::invalid_argument("decide: formula has free variables");
  check_level(sentence);
  trace_.clear();
  const Formula qf = eliminate(sentence);
  Verdict v;
  v.value = evaluate_closed(qf);
  note("closed form " + print(qf) + " evaluates " + (v.value ? "True" : "False"));
  v.trace = trace_;
  return v;
}

Equivalence Engine::equivalence(const Formula& a, const Formula& b) {
  Equivalence out;
  out.level_mismatch = a.level() != b.level();
  const Level top = std::max(a.level(), b.level());
  out.theory = std::max(level_, theory_for(top));
  Engine sub(out.theory);
  sub.set_tracing(tracing_);
  out.equivalent = sub.decide(universal_closure(Formula::biconditional(a, b))).value;
  trace_ = sub.trace();
  return out;
}

}  // namespace baqe
