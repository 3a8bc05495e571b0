#include "baqe/minterm.hpp"

#include <algorithm>
#include <stdexcept>

namespace baqe {

namespace {

// Bitmask of the variables in a monomial, or -1 if one is not in vars.
std::int64_t monomial_mask(const Monomial& mono, const VarList& vars) {
  std::int64_t mask = 0;
  for (const auto& v : mono) {
    auto it = std::find(vars.begin(), vars.end(), v);
    if (it == vars.end()) return -1;
    mask |= std::int64_t{1} << (it - vars.begin());
  }
  return mask;
}

std::vector<std::uint32_t> term_masks(const Term& t, const VarList& vars) {
  if (vars.size() > kMaxMintermVars) throw std::invalid_argument("too many variables for a minterm table");
  std::vector<std::uint32_t> masks;
  masks.reserve(t.monomials().size());
  for (const auto& mono : t.monomials()) {
    const std::int64_t mask = monomial_mask(mono, vars);
    if (mask < 0) throw std::invalid_argument("term mentions a variable outside the minterm basis");
    masks.push_back(static_cast<std::uint32_t>(mask));
  }
  return masks;
}

bool masks_at(const std::vector<std::uint32_t>& masks, Minterm m) {
  bool value = false;
  for (auto mask : masks) value ^= (m & mask) == mask;
  return value;
}

}  // namespace

Term minterm_term(Minterm m, const VarList& vars) {
  Term out = Term::one();
  for (std::size_t i = 0; i < vars.size(); ++i) {
    const Term v = Term::variable(vars[i]);
    out = out * ((m >> i) & 1u ? v : v.complement());
  }
  return out;
}

bool term_at(const Term& t, Minterm m, const VarList& vars) { return masks_at(term_masks(t, vars), m); }

std::vector<Minterm> minterms_below(const Term& t, const VarList& vars) {
  const auto masks = term_masks(t, vars);
  std::vector<Minterm> out;
  const auto n = static_cast<Minterm>(minterm_count(vars));
  for (Minterm m = 0; m < n; ++m) {
    if (masks_at(masks, m)) out.push_back(m);
  }
  return out;
}

Cardinal operator+(Cardinal a, Cardinal b) {
  if (a.infinite || b.infinite) return Cardinal::omega();
  return Cardinal::finite(a.value + b.value);
}

std::string to_string(const Cardinal& c) { return c.infinite ? "inf" : std::to_string(c.value); }

bool MintermConstraint::holds(const std::vector<Cardinal>& cards) const {
  Cardinal sum = Cardinal::finite(0);
  bool all_finite = true;
  bool all_zero = true;
  for (auto m : minterms) {
    const Cardinal c = cards.at(m);
    sum = sum + c;
    all_finite = all_finite && !c.infinite;
    all_zero = all_zero && c == Cardinal::finite(0);
  }
  switch (atom.kind) {
    case AtomKind::IsZero:
      return all_zero;
    case AtomKind::AtLeast:
      return sum.infinite || sum.value >= atom.index;
    case AtomKind::Fin:
      return all_finite;
    case AtomKind::Res:
      return all_finite && sum.value % atom.modulus == atom.residue;
  }
  return false;
}

MintermConstraint decompose(const Formula& atom, const VarList& vars) {
  if (!atom.is_atom()) throw std::invalid_argument("decompose: not an atomic formula");
  return MintermConstraint{atom.atom(), minterms_below(atom.atom().term, vars)};
}

}  // namespace baqe
