#pragma once

#include <cstddef>
#include <vector>

#include "baqe/cardset.hpp"
#include "baqe/descriptor.hpp"
#include "baqe/formula.hpp"
#include "baqe/minterm.hpp"

namespace baqe {

/// One allowed count set per minterm of a variable list. A tuple of counts
/// is in the cell when each count lies in its component.
using Cell = std::vector<CardSet>;

/// A tuple of minterm counts comes from an actual assignment iff the counts
/// add up to the (infinite) top element, i.e. some count is infinite.
bool realizable(const Cell& cell);

/// A finite union of cells over the minterms of a fixed variable list,
/// denoting the set of realizable count tuples it contains.
///
/// Two assignments with the same minterm counts satisfy the same formulas, so
/// a formula over the variables is the same thing as such a set.
class Region {
public:
  explicit Region(std::size_t var_count);  // empty

  static Region universe(std::size_t var_count);
  static Region from_tables(const std::vector<MintermTable>& tables, std::size_t var_count);

  std::size_t var_count() const { return var_count_; }
  const std::vector<Cell>& cells() const { return cells_; }
  bool is_empty() const { return cells_.empty(); }
  bool is_universe() const;

  /// Adds a cell unless it contains no realizable tuple.
  void add(Cell cell);

  Region intersect(const Region& other) const;
  Region unite(const Region& other) const;
  Region complement() const;
  /// Existentially projects the last variable: counts of m and m with the
  /// last variable set are summed.
  Region project_last() const;
  /// Drops subsumed cells and merges cells that differ in one component.
  void simplify();

private:
  std::size_t var_count_;
  std::vector<Cell> cells_;
};

/// Region of the assignments satisfying f (positive) or its negation.
/// vars must cover the free variables of f and exclude its bound ones.
Region compile(const Formula& f, const VarList& vars, bool positive = true);

/// Quantifier-free formula over vars defining the region.
Formula to_formula(const Region& region, const VarList& vars);

}  // namespace baqe
