#pragma once

#include <cstdint>
#include <string>
#include <vector>

#include "baqe/formula.hpp"
#include "baqe/term.hpp"

namespace baqe {

/// Ordered variable list. Minterm bit i is set when vars[i] appears positively.
using VarList = std::vector<std::string>;
using Minterm = std::uint32_t;

/// Minterm tables are dense over at most this many variables.
inline constexpr std::size_t kMaxMintermVars = 12;

inline std::size_t minterm_count(const VarList& vars) { return std::size_t{1} << vars.size(); }

/// The product of vars[i] or 1 + vars[i] selected by the bits of m.
Term minterm_term(Minterm m, const VarList& vars);

/// Value of t at the point where each vars[i] is bit i of m.
bool term_at(const Term& t, Minterm m, const VarList& vars);

/// Minterms contained in t, ascending. Throws std::invalid_argument when t
/// mentions a variable outside vars.
std::vector<Minterm> minterms_below(const Term& t, const VarList& vars);

/// A cardinal in N or the countable infinity.
struct Cardinal {
  bool infinite = false;
  std::uint64_t value = 0;

  static Cardinal finite(std::uint64_t n) { return {false, n}; }
  static Cardinal omega() { return {true, 0}; }

  friend bool operator==(const Cardinal&, const Cardinal&) = default;
};

Cardinal operator+(Cardinal a, Cardinal b);
std::string to_string(const Cardinal& c);

/// An atom rewritten as a condition on the atom counts of the minterms below
/// its term: IsZero means every count is 0, AtLeast means the counts sum to at
/// least k, Fin means every count is finite, Res means every count is finite
/// and the sum is r modulo n.
struct MintermConstraint {
  Atom atom;  // kind and parameters; the term is kept for reference
  std::vector<Minterm> minterms;

  /// cards[m] is the count of minterm m.
  bool holds(const std::vector<Cardinal>& cards) const;
};

/// Throws std::invalid_argument on non-atomic input or unknown variables.
MintermConstraint decompose(const Formula& atom, const VarList& vars);

}  // namespace baqe
