#pragma once

#include <cstddef>
#include <cstdint>
#include <memory>
#include <string>
#include <vector>

#include "baqe/term.hpp"

namespace baqe {

/// Language levels: L1 has only C_k and equations, L2 adds Fin, L3 adds Res.
enum class Level : std::uint8_t { L1 = 1, L2 = 2, L3 = 3 };

std::string to_string(Level level);

enum class AtomKind : std::uint8_t { IsZero, AtLeast, Fin, Res };

/// An atomic predicate applied to a normalized term.
///   IsZero(t)     t = 0
///   AtLeast(k, t) C_k(t): at least k atoms below t, k >= 1
///   Fin(t)        t lies in the finiteness ideal
///   Res(n, r, t)  Fin(t) and the atom count of t is r modulo n, 0 <= r < n
struct Atom {
  AtomKind kind = AtomKind::IsZero;
  std::uint32_t index = 0;
  std::uint32_t modulus = 0;
  std::uint32_t residue = 0;
  Term term;

  Level level() const;
  friend bool operator==(const Atom&, const Atom&) = default;
};

/// Immutable first-order formula over the atoms above.
///
/// Construction keeps bound variables distinct from each other and from free
/// variables by renaming binders (x becomes x_1, x_2, ...) when a clash would
/// occur, so substitution never captures.
class Formula {
public:
  enum class Kind : std::uint8_t { True, False, Atom, Not, And, Or, Implies, Iff, Exists, Forall };

  Formula();  // False

  static Formula truth(bool value);
  /// Validates parameters (k >= 1, n >= 1) and folds t = 0 for constant t.
  static Formula atom(Atom a);
  static Formula is_zero(Term t);
  static Formula at_least(std::uint32_t k, Term t);
  static Formula fin(Term t);
  /// r is reduced to its canonical representative modulo n.
  static Formula res(std::uint32_t n, std::int64_t r, Term t);

  static Formula negation(Formula f);
  static Formula conjunction(Formula a, Formula b);
  static Formula disjunction(Formula a, Formula b);
  static Formula implication(Formula a, Formula b);
  static Formula biconditional(Formula a, Formula b);
  static Formula exists(std::string var, Formula body);
  static Formula forall(std::string var, Formula body);

  static Formula binary(Kind kind, Formula a, Formula b);
  static Formula quantifier(Kind kind, std::string var, Formula body);

  Kind kind() const;
  bool is_atom() const { return kind() == Kind::Atom; }
  bool is_constant() const { return kind() == Kind::True || kind() == Kind::False; }
  bool is_binary() const;
  bool is_quantifier() const { return kind() == Kind::Exists || kind() == Kind::Forall; }

  const Atom& atom() const;
  /// Operand i of a Not (i = 0) or binary node (i = 0, 1).
  const Formula& operand(std::size_t i) const;
  /// Bound variable and body of a quantifier node.
  const std::string& variable() const;
  const Formula& body() const;

  Level level() const;
  bool is_quantifier_free() const;
  bool is_sentence() const { return free_variables().empty(); }
  const std::vector<std::string>& free_variables() const;
  const std::vector<std::string>& bound_variables() const;
  /// Nodes in the formula tree, counting term nodes of the printed form.
  std::size_t size() const;
  std::size_t quantifier_depth() const;

  friend bool operator==(const Formula& a, const Formula& b);

private:
  struct Node;
  explicit Formula(std::shared_ptr<const Node> node) : node_(std::move(node)) {}

  std::shared_ptr<const Node> node_;
};

inline const std::vector<std::string>& free_vars(const Formula& f) { return f.free_variables(); }

/// Replaces free occurrences of var by t, renaming binders that would capture
/// variables of t. Atom terms are re-normalized.
Formula substitute(const Formula& f, const std::string& var, const Term& t);

/// Renames every occurrence (binders included) of a variable. The caller
/// guarantees fresh is unused in f.
Formula rename_variable(const Formula& f, const std::string& old_name, const std::string& fresh);

/// Universal closure over the free variables, innermost binder last.
Formula universal_closure(const Formula& f);

/// Calls fn on every atom of f.
template <class Fn>
void for_each_atom(const Formula& f, Fn&& fn) {
  switch (f.kind()) {
    case Formula::Kind::Atom:
      fn(f.atom());
      return;
    case Formula::Kind::True:
    case Formula::Kind::False:
      return;
    case Formula::Kind::Not:
      for_each_atom(f.operand(0), fn);
      return;
    case Formula::Kind::Exists:
    case Formula::Kind::Forall:
      for_each_atom(f.body(), fn);
      return;
    default:
      for_each_atom(f.operand(0), fn);
      for_each_atom(f.operand(1), fn);
  }
}

}  // namespace baqe
