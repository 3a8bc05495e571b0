#pragma once

#include <cstdint>
#include <functional>
#include <optional>
#include <random>
#include <string>
#include <vector>

#include "baqe/formula.hpp"
#include "baqe/qe.hpp"

namespace baqe {

struct SchemaInstanceSpec {
  TheoryLevel level = TheoryLevel::T3;
  /// Bound on every schema parameter (n, r, s, m for Res schemas, k for C_k).
  std::uint32_t bound = 8;
};

struct AxiomInstance {
  std::string family;  // e.g. "T1.atomic", "T3.additivity"
  Formula sentence;
};

/// All instances of the axiom schemas of theories up to spec.level with
/// parameters in [0, bound] (moduli and indices from 1), deduplicated after
/// canonicalization, in a fixed order.
std::vector<AxiomInstance> generate_axioms(const SchemaInstanceSpec& spec);

struct EnumerationSpec {
  Level level = Level::L1;
  /// Maximal surface size: every connective, quantifier, relation symbol and
  /// predicate symbol counts 1, every term operator, variable and constant 1;
  /// an atom is counted in its cheapest rendering ("x = 1" is 3, "C[2](~x)"
  /// is 3, "x <= y" is 3).
  std::size_t size = 7;
  std::vector<std::string> free_vars{"x"};
  std::uint32_t max_c = 3;
  /// Fin atoms are allowed when this holds and level >= L2.
  bool allow_fin = true;
  /// Res moduli allowed when level = L3 (every residue of each).
  std::vector<std::uint32_t> res_moduli;
  /// Maximal nesting of quantifiers; bound variables are named from bound_names.
  std::size_t max_quantifier_depth = 2;
  std::vector<std::string> bound_names{"y", "z", "w"};
};

/// Formulas in non-decreasing size, deduplicated by printed form, skipping
/// binary connectives with identical operands and commuted copies of &, |
/// and <->. Quantified bodies mention their bound variable.
std::vector<Formula> enumerate_formulas(const EnumerationSpec& spec);

/// Size of the cheapest rendering of a formula as used by the enumeration.
std::size_t surface_size(const Formula& f);

struct DefcheckResult {
  bool definable = false;
  std::optional<Formula> definition;  // first equivalent candidate
  std::size_t checked = 0;            // candidates compared
};

/// Compares target with every candidate in order; stops at the first
/// equivalent one. progress, if set, is called after each candidate.
DefcheckResult defcheck(const Formula& target, const std::vector<Formula>& candidates,
                        const std::function<void(std::size_t)>& progress = {});
DefcheckResult defcheck(const Formula& target, const EnumerationSpec& spec);

struct RandomFormulaSpec {
  Level level = Level::L3;
  std::vector<std::string> free_vars{"a", "b"};  // pool; each is used or not
  std::vector<std::string> bound_vars{"x", "y", "z"};
  std::size_t max_vars = 3;  // free plus bound in scope at once
  std::size_t max_quantifier_depth = 2;
  std::size_t max_size = 12;  // Formula::size
  std::uint32_t max_c = 3;
  std::vector<std::uint32_t> res_moduli{2, 3, 4};
  bool sentence = false;
};

/// Deterministic random formulas for property tests.
class FormulaGenerator {
public:
  explicit FormulaGenerator(std::uint64_t seed) : rng_(seed) {}

  Formula next(const RandomFormulaSpec& spec);
  Term term(const std::vector<std::string>& scope);
  Formula atom(const std::vector<std::string>& scope, const RandomFormulaSpec& spec);
  std::uint64_t below(std::uint64_t n);

private:
  Formula formula(std::vector<std::string>& scope, std::size_t depth, std::size_t budget, const RandomFormulaSpec& spec);

  std::mt19937_64 rng_;
};

}  // namespace baqe
