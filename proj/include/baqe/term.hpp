#pragma once

#include <compare>
#include <cstddef>
#include <cstdint>
#include <string>
#include <vector>

namespace baqe {

/// A product of distinct variables, sorted by name. The empty monomial is 1.
using Monomial = std::vector<std::string>;

/// An element of the free Boolean ring: a multilinear polynomial over GF(2).
///
/// Terms only exist in ring normal form. Monomials are kept sorted (higher
/// degree first, then lexicographically) with no duplicates, so two terms
/// denote the same Boolean function iff they compare equal.
class Term {
public:
  Term() = default;

  static Term zero() { return Term(); }
  static Term one();
  static Term variable(std::string name);

  bool is_zero() const { return monomials_.empty(); }
  bool is_one() const;
  bool is_constant() const { return is_zero() || is_one(); }

  const std::vector<Monomial>& monomials() const { return monomials_; }

  /// Variables occurring in the term, sorted and unique.
  std::vector<std::string> variables() const;
  bool mentions(const std::string& name) const;

  Term substitute(const std::string& name, const Term& replacement) const;

  /// Number of nodes in the printed ring form; used for size accounting.
  std::size_t node_count() const;

  friend Term operator+(const Term& a, const Term& b);
  friend Term operator*(const Term& a, const Term& b);

  Term complement() const { return one() + *this; }

  friend bool operator==(const Term&, const Term&) = default;
  friend std::strong_ordering operator<=>(const Term& a, const Term& b);

private:
  explicit Term(std::vector<Monomial> canonical) : monomials_(std::move(canonical)) {}
  static Term from_unsorted(std::vector<Monomial> monomials);

  std::vector<Monomial> monomials_;
};

// Lattice operations through the ring dictionary.
inline Term meet(const Term& a, const Term& b) { return a * b; }
inline Term join(const Term& a, const Term& b) { return a + b + a * b; }
inline Term difference(const Term& a, const Term& b) { return a + a * b; }

/// Ring form, e.g. "x . y + x + 1".
std::string to_string(const Term& t);

/// Surface term syntax before normalization. Both lattice (&, |, ~) and ring
/// (+, .) operators are allowed, plus the difference sugar a - b.
struct TermExpr {
  enum class Op : std::uint8_t { Zero, One, Var, Not, Meet, Join, Plus, Times, Minus };

  Op op = Op::Zero;
  std::string name;
  std::vector<TermExpr> args;

  static TermExpr zero() { return {Op::Zero, {}, {}}; }
  static TermExpr one() { return {Op::One, {}, {}}; }
  static TermExpr var(std::string n) { return {Op::Var, std::move(n), {}}; }
  static TermExpr unary(Op op, TermExpr a);
  static TermExpr binary(Op op, TermExpr a, TermExpr b);

  std::size_t size() const;
  bool is_lattice() const;
};

/// Maps any surface expression to its canonical ring polynomial.
Term normalize(const TermExpr& expr);

/// Terms are stored normalized; this is the identity and exists so callers
/// can treat both representations uniformly.
inline const Term& normalize(const Term& t) { return t; }

/// Translates a lattice expression (0, 1, &, |, ~) through the dictionary
/// x & y = x.y, x | y = x + y + x.y, ~x = 1 + x. Throws std::invalid_argument
/// if the expression uses ring operators.
Term from_lattice(const TermExpr& expr);

}  // namespace baqe
