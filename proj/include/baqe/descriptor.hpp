#pragma once

#include <cstdint>
#include <map>
#include <optional>
#include <string>
#include <vector>

#include "baqe/cardset.hpp"
#include "baqe/formula.hpp"
#include "baqe/minterm.hpp"

namespace baqe {

enum class FinStatus : std::uint8_t { Unconstrained, MustFin, MustNotFin };

/// Finite counts restricted to allowed residues modulo `modulus`.
struct ResidueConstraint {
  std::uint32_t modulus = 1;
  std::vector<bool> allowed;  // size == modulus

  friend bool operator==(const ResidueConstraint&, const ResidueConstraint&) = default;
};

/// Constraint on a single element: an exact count or a lower bound, a
/// finiteness status and optionally a residue class of the (finite) count.
///
/// Values are kept canonical so that equal constraints compare equal:
///   - a residue forces MustFin, MustNotFin with a residue is unsat;
///   - Exact forces MustFin; a residue on an exact count is checked then dropped;
///   - MustNotFin drops any lower bound;
///   - the residue modulus is reduced to the minimal period of the allowed set,
///     a full set is dropped and an empty one is unsat;
///   - AtLeast(k) is raised to the least l >= k in an allowed class.
class Descriptor {
public:
  enum class CountKind : std::uint8_t { Exact, AtLeast };

  Descriptor() = default;  // trivial
  Descriptor(CountKind kind, std::uint64_t count, FinStatus fin, std::optional<ResidueConstraint> residue);

  static Descriptor trivial() { return {}; }
  static Descriptor unsat();
  static Descriptor exact(std::uint64_t e) { return {CountKind::Exact, e, FinStatus::Unconstrained, std::nullopt}; }
  static Descriptor at_least(std::uint64_t k) { return {CountKind::AtLeast, k, FinStatus::Unconstrained, std::nullopt}; }
  static Descriptor must_fin() { return {CountKind::AtLeast, 0, FinStatus::MustFin, std::nullopt}; }
  static Descriptor must_not_fin() { return {CountKind::AtLeast, 0, FinStatus::MustNotFin, std::nullopt}; }
  /// Finite with count in one of the given residues modulo n.
  static Descriptor residue(std::uint32_t n, const std::vector<std::uint32_t>& residues);

  bool is_unsat() const { return unsat_; }
  bool is_trivial() const;
  CountKind count_kind() const { return kind_; }
  std::uint64_t count() const { return count_; }
  FinStatus fin() const { return fin_; }
  const std::optional<ResidueConstraint>& residue_constraint() const { return residue_; }

  friend bool operator==(const Descriptor&, const Descriptor&) = default;

private:
  void canonicalize();

  CountKind kind_ = CountKind::AtLeast;
  std::uint64_t count_ = 0;
  FinStatus fin_ = FinStatus::Unconstrained;
  std::optional<ResidueConstraint> residue_;
  bool unsat_ = false;
};

std::string to_string(const Descriptor& d);

/// Meet in the constraint lattice; residues are lifted to the lcm of moduli.
Descriptor conjoin(const Descriptor& a, const Descriptor& b);

/// Some element of a model satisfies d.
inline bool satisfiable(const Descriptor& d) { return !d.is_unsat(); }

/// The counts (in N or infinite) an element satisfying d may have.
CardSet denote(const Descriptor& d);

/// Splits a count set into descriptors whose denotations union to it.
/// Uses only count constraints whenever s is either finite-and-bounded or
/// cofinite-and-infinite, so C_k vocabulary in gives C_k vocabulary out.
std::vector<Descriptor> describe(const CardSet& s);

/// Descriptor of a positive atom about atom.term.
Descriptor atom_descriptor(const Atom& atom);

/// The negated atom as a disjunction of descriptors about atom.term.
std::vector<Descriptor> negation_descriptors(const Atom& atom);

/// Formula stating that t satisfies d.
Formula to_formula(const Descriptor& d, const Term& t);

/// Disjunction of to_formula over describe(s).
Formula to_formula(const CardSet& s, const Term& t);

/// The negated atom as a formula in the same vocabulary, e.g.
/// ~Res(2,0)(x) becomes ~Fin(x) | Res(2,1)(x).
Formula negate_atom(const Atom& atom);

/// Requirements on beta and on m - beta for a split of an element m.
struct SplitSpec {
  Descriptor first;
  Descriptor second;
};

/// Descriptors for m such that some beta <= m realizes spec.first while
/// m - beta realizes spec.second. Throws std::invalid_argument if a
/// component is unsatisfiable.
std::vector<Descriptor> project_split(const SplitSpec& spec);

/// The same condition as a quantifier-free formula about m.
Formula project_split(const SplitSpec& spec, const Term& m);

/// Sparse assignment of descriptors to minterms; absent minterms are trivial.
using MintermTable = std::map<Minterm, Descriptor>;

/// Tables whose union expresses "the counts of the minterms in s, summed,
/// satisfy d". Every table is satisfiable entrywise.
std::vector<MintermTable> distribute(const Descriptor& d, const std::vector<Minterm>& s);

/// Tables expressing an atom (or its negation) over the minterms of vars.
std::vector<MintermTable> atom_tables(const Atom& atom, bool positive, const VarList& vars);

}  // namespace baqe
