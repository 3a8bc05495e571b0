#pragma once

#include <optional>
#include <stdexcept>
#include <string>
#include <vector>

#include "baqe/formula.hpp"

namespace baqe {

/// T1 has C_k, T2 adds Fin, T3 adds Res; each extends the previous.
enum class TheoryLevel : std::uint8_t { T1 = 1, T2 = 2, T3 = 3 };

std::string to_string(TheoryLevel t);
std::optional<TheoryLevel> parse_theory(const std::string& name);
inline bool admits(TheoryLevel t, Level l) { return static_cast<int>(l) <= static_cast<int>(t); }
inline TheoryLevel theory_for(Level l) { return static_cast<TheoryLevel>(static_cast<int>(l)); }

/// Input above the theory's vocabulary, e.g. Fin at T1.
class LevelError : public std::invalid_argument {
public:
  using std::invalid_argument::invalid_argument;
};

struct Verdict {
  bool value = false;
  std::vector<std::string> trace;
};

struct Equivalence {
  bool equivalent = false;
  bool level_mismatch = false;  // inputs had different levels; compared at the larger
  TheoryLevel theory = TheoryLevel::T1;
};

/// Truth of a quantifier-free sentence: its terms are 0 or 1, and the top
/// element is infinite. Throws std::invalid_argument otherwise.
bool evaluate_closed(const Formula& f);

/// Quantifier elimination and decision for one theory level. The theories
/// are complete, so everything is computed in the standard model: an element
/// is summarized by its atom count in N or infinity, and a formula over
/// variables by the set of minterm count tuples satisfying it.
///
/// An Engine keeps the trace of its most recent call; use one per thread.
class Engine {
public:
  explicit Engine(TheoryLevel level = TheoryLevel::T3) : level_(level) {}

  TheoryLevel level() const { return level_; }
  void set_tracing(bool on) { tracing_ = on; }
  const std::vector<std::string>& trace() const { return trace_; }

  /// f is E x p or A x p with p quantifier-free; returns an equivalent
  /// quantifier-free formula in the free variables of f.
  Formula eliminate_one(const Formula& f);
  /// Replaces every maximal quantified subformula by its elimination.
  Formula eliminate_all(const Formula& f);
  /// Requires a sentence.
  Verdict decide(const Formula& sentence);
  /// Universal closure of a <-> b, decided at the larger of the two levels
  /// (or this engine's level if larger). Ignores the engine's level check.
  Equivalence equivalence(const Formula& a, const Formula& b);
  bool equivalent(const Formula& a, const Formula& b) { return equivalence(a, b).equivalent; }

private:
  void check_level(const Formula& f) const;
  Formula eliminate(const Formula& f);
  void note(const std::string& line);

  TheoryLevel level_;
  bool tracing_ = false;
  std::vector<std::string> trace_;
};

}  // namespace baqe
