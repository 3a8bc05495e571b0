#include "baqe/region.hpp"

#include <algorithm>
#include <stdexcept>

namespace baqe {

bool realizable(const Cell& cell) {
  bool infinite = false;
  for (const auto& c : cell) {
    if (c.is_empty()) return false;
    infinite = infinite || c.has_infinite();
  }
  return infinite;
}

Region::Region(std::size_t var_count) : var_count_(var_count) {
  if (var_count > kMaxMintermVars) throw std::invalid_argument("Region: too many variables");
}

Region Region::universe(std::size_t var_count) {
  Region r(var_count);
  r.cells_.emplace_back(std::size_t{1} << var_count, CardSet::universe());
  return r;
}

Region Region::from_tables(const std::vector<MintermTable>& tables, std::size_t var_count) {
  Region r(var_count);
  for (const auto& table : tables) {
    Cell cell(std::size_t{1} << var_count, CardSet::universe());
    for (const auto& [m, d] : table) cell.at(m) = denote(d);
    r.add(std::move(cell));
  }
  r.simplify();
  return r;
}

bool Region::is_universe() const {
  return std::any_of(cells_.begin(), cells_.end(), [](const Cell& c) {
    return std::all_of(c.begin(), c.end(), [](const CardSet& s) { return s.is_universe(); });
  });
}

void Region::add(Cell cell) {
  if (realizable(cell)) cells_.push_back(std::move(cell));
}

namespace {

bool cell_subset(const Cell& a, const Cell& b) {
  for (std::size_t i = 0; i < a.size(); ++i) {
    if (!(a[i] == b[i]) && !a[i].subset_of(b[i])) return false;
  }
  return true;
}

Cell cell_meet(const Cell& a, const Cell& b) {
  Cell out(a.size());
  for (std::size_t i = 0; i < a.size(); ++i) out[i] = a[i] & b[i];
  return out;
}

// Disjoint pieces covering a minus b.
void sharp(const Cell& a, const Cell& b, std::vector<Cell>& out) {
  if (!realizable(cell_meet(a, b))) {
    out.push_back(a);
    return;
  }
  Cell prefix = a;
  for (std::size_t i = 0; i < a.size(); ++i) {
    if (b[i].is_universe()) continue;
    CardSet rest = a[i] - b[i];
    if (!rest.is_empty()) {
      Cell piece = prefix;
      piece[i] = std::move(rest);
      if (realizable(piece)) out.push_back(std::move(piece));
    }
    prefix[i] = a[i] & b[i];
  }
}

}  // namespace

Region Region::intersect(const Region& other) const {
  Region r(var_count_);
  for (const auto& a : cells_) {
    for (const auto& b : other.cells_) r.add(cell_meet(a, b));
  }
  r.simplify();
  return r;
}

Region Region::unite(const Region& other) const {
  Region r = *this;
  for (const auto& c : other.cells_) r.cells_.push_back(c);
  r.simplify();
  return r;
}

Region Region::complement() const {
  Region r = universe(var_count_);
  for (const auto& b : cells_) {
    std::vector<Cell> next;
    for (const auto& a : r.cells_) sharp(a, b, next);
    r.cells_ = std::move(next);
    r.simplify();
    if (r.cells_.empty()) break;
  }
  return r;
}

Region Region::project_last() const {
  if (var_count_ == 0) throw std::logic_error("Region::project_last: no variable to project");
  const std::size_t half = std::size_t{1} << (var_count_ - 1);
  Region r(var_count_ - 1);
  for (const auto& c : cells_) {
    Cell out(half);
    for (std::size_t m = 0; m < half; ++m) out[m] = sum(c[m], c[m | half]);
    r.add(std::move(out));
  }
  r.simplify();
  return r;
}

void Region::simplify() {
  bool changed = true;
  while (changed) {
    changed = false;
    // Subsumption.
    std::vector<bool> dropped(cells_.size(), false);
    for (std::size_t i = 0; i < cells_.size(); ++i) {
      for (std::size_t j = 0; j < cells_.size() && !dropped[i]; ++j) {
        if (i == j || dropped[j]) continue;
        // Of two equal cells the later one goes.
        if (cell_subset(cells_[i], cells_[j])) dropped[i] = j < i || !cell_subset(cells_[j], cells_[i]);
      }
    }
    std::vector<Cell> kept;
    for (std::size_t i = 0; i < cells_.size(); ++i) {
      if (!dropped[i]) kept.push_back(std::move(cells_[i]));
    }
    cells_ = std::move(kept);
    // Merge neighbours differing in a single component.
    for (std::size_t i = 0; i < cells_.size() && !changed; ++i) {
      for (std::size_t j = i + 1; j < cells_.size() && !changed; ++j) {
        std::size_t diff = 0;
        std::size_t where = 0;
        for (std::size_t k = 0; k < cells_[i].size() && diff < 2; ++k) {
          if (!(cells_[i][k] == cells_[j][k])) {
            ++diff;
            where = k;
          }
        }
        if (diff == 1) {
          cells_[i][where] = cells_[i][where] | cells_[j][where];
          cells_.erase(cells_.begin() + static_cast<std::ptrdiff_t>(j));
          changed = true;
        }
      }
    }
  }
}

namespace {

VarList extended(const VarList& vars, const std::string& v) {
  if (std::find(vars.begin(), vars.end(), v) != vars.end()) {
    throw std::invalid_argument("compile: bound variable already in the basis");
  }
  VarList out = vars;
  out.push_back(v);
  return out;
}

}  // namespace

Region compile(const Formula& f, const VarList& vars, bool positive) {
  using K = Formula::Kind;
  const std::size_t n = vars.size();
  switch (f.kind()) {
    case K::True:
      return positive ? Region::universe(n) : Region(n);
    case K::False:
      return positive ? Region(n) : Region::universe(n);
    case K::Atom:
      return Region::from_tables(atom_tables(f.atom(), positive, vars), n);
    case K::Not:
      return compile(f.operand(0), vars, !positive);
    case K::And:
    case K::Or: {
      const bool meet = (f.kind() == K::And) == positive;
      Region a = compile(f.operand(0), vars, positive);
      if (meet && a.is_empty()) return a;
      if (!meet && a.is_universe()) return a;
      Region b = compile(f.operand(1), vars, positive);
      return meet ? a.intersect(b) : a.unite(b);
    }
    case K::Implies: {
      // a -> b is ~a | b; its negation is a & ~b.
      Region a = compile(f.operand(0), vars, !positive);
      Region b = compile(f.operand(1), vars, positive);
      return positive ? a.unite(b) : a.intersect(b);
    }
    case K::Iff: {
      Region a = compile(f.operand(0), vars, true);
      Region na = compile(f.operand(0), vars, false);
      Region b = compile(f.operand(1), vars, true);
      Region nb = compile(f.operand(1), vars, false);
      if (positive) return a.intersect(b).unite(na.intersect(nb));
      return a.intersect(nb).unite(na.intersect(b));
    }
    case K::Exists:
    case K::Forall: {
      const VarList inner = extended(vars, f.variable());
      // E x p is the projection; A x p is ~E x ~p.
      const bool exists = f.kind() == K::Exists;
      Region body = compile(f.body(), inner, exists).project_last();
      return exists == positive ? body : body.complement();
    }
  }
  throw std::logic_error("unreachable formula kind");
}

Formula to_formula(const Region& region, const VarList& vars) {
  if (region.is_empty()) return Formula::truth(false);
  if (vars.empty() || region.is_universe()) return Formula::truth(true);
  Formula out = Formula::truth(false);
  for (const auto& cell : region.cells()) {
    Formula conj = Formula::truth(true);
    for (Minterm m = 0; m < cell.size(); ++m) {
      if (cell[m].is_universe()) continue;
      Formula part = to_formula(cell[m], minterm_term(m, vars));
      conj = conj.kind() == Formula::Kind::True ? part : Formula::conjunction(conj, part);
    }
    out = out.kind() == Formula::Kind::False ? conj : Formula::disjunction(out, conj);
  }
  return out;
}

}  // namespace baqe
