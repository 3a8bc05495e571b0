#include "baqe/term.hpp"

#include <algorithm>
#include <stdexcept>

namespace baqe {

namespace {

// Higher degree first, then lexicographic; the constant 1 sorts last.
bool monomial_less(const Monomial& a, const Monomial& b) {
  if (a.size() != b.size()) return a.size() > b.size();
  return a < b;
}

Monomial monomial_product(const Monomial& a, const Monomial& b) {
  Monomial out;
  out.reserve(a.size() + b.size());
  std::set_union(a.begin(), a.end(), b.begin(), b.end(), std::back_inserter(out));
  return out;
}

}  // namespace

Term Term::one() { return Term(std::vector<Monomial>{Monomial{}}); }

Term Term::variable(std::string name) {
  return Term(std::vector<Monomial>{Monomial{std::move(name)}});
}

bool Term::is_one() const { return monomials_.size() == 1 && monomials_.front().empty(); }

Term Term::from_unsorted(std::vector<Monomial> monomials) {
  std::sort(monomials.begin(), monomials.end(), monomial_less);
  // Coefficients live in GF(2): equal neighbours cancel pairwise.
  std::vector<Monomial> out;
  out.reserve(monomials.size());
  for (auto& m : monomials) {
    if (!out.empty() && out.back() == m) {
      out.pop_back();
    } else {
      out.push_back(std::move(m));
    }
  }
  return Term(std::move(out));
}

std::vector<std::string> Term::variables() const {
  std::vector<std::string> vars;
  for (const auto& m : monomials_) vars.insert(vars.end(), m.begin(), m.end());
  std::sort(vars.begin(), vars.end());
  vars.erase(std::unique(vars.begin(), vars.end()), vars.end());
  return vars;
}

bool Term::mentions(const std::string& name) const {
  for (const auto& m : monomials_) {
    if (std::binary_search(m.begin(), m.end(), name)) return true;
  }
  return false;
}

Term Term::substitute(const std::string& name, const Term& replacement) const {
  if (!mentions(name)) return *this;
  Term result;
  for (const auto& m : monomials_) {
    if (!std::binary_search(m.begin(), m.end(), name)) {
      result = result + Term(std::vector<Monomial>{m});
      continue;
    }
    Monomial rest;
    for (const auto& v : m) {
      if (v != name) rest.push_back(v);
    }
    result = result + Term(std::vector<Monomial>{rest}) * replacement;
  }
  return result;
}

std::size_t Term::node_count() const {
  if (monomials_.empty()) return 1;
  std::size_t n = monomials_.size() - 1;
  for (const auto& m : monomials_) n += m.empty() ? 1 : 2 * m.size() - 1;
  return n;
}

Term operator+(const Term& a, const Term& b) {
  std::vector<Monomial> out;
  out.reserve(a.monomials_.size() + b.monomials_.size());
  auto i = a.monomials_.begin();
  auto j = b.monomials_.begin();
  while (i != a.monomials_.end() && j != b.monomials_.end()) {
    if (*i == *j) {
      ++i;
      ++j;
    } else if (monomial_less(*i, *j)) {
      out.push_back(*i++);
    } else {
      out.push_back(*j++);
    }
  }
  out.insert(out.end(), i, a.monomials_.end());
  out.insert(out.end(), j, b.monomials_.end());
  return Term(std::move(out));
}

Term operator*(const Term& a, const Term& b) {
  if (a.is_zero() || b.is_zero()) return Term();
  if (a.is_one()) return b;
  if (b.is_one()) return a;
  std::vector<Monomial> products;
  products.reserve(a.monomials_.size() * b.monomials_.size());
  for (const auto& x : a.monomials_) {
    for (const auto& y : b.monomials_) products.push_back(monomial_product(x, y));
  }
  return Term::from_unsorted(std::move(products));
}

std::strong_ordering operator<=>(const Term& a, const Term& b) {
  return std::lexicographical_compare_three_way(
      a.monomials_.begin(), a.monomials_.end(), b.monomials_.begin(), b.monomials_.end(),
      [](const Monomial& x, const Monomial& y) {
        if (x == y) return std::strong_ordering::equal;
        return monomial_less(x, y) ? std::strong_ordering::less : std::strong_ordering::greater;
      });
}

std::string to_string(const Term& t) {
  if (t.is_zero()) return "0";
  std::string out;
  for (const auto& m : t.monomials()) {
    if (!out.empty()) out += " + ";
    if (m.empty()) {
      out += "1";
      continue;
    }
    for (std::size_t i = 0; i < m.size(); ++i) {
      if (i) out += " . ";
      out += m[i];
    }
  }
  return out;
}

TermExpr TermExpr::unary(Op op, TermExpr a) {
  TermExpr e{op, {}, {}};
  e.args.push_back(std::move(a));
  return e;
}

TermExpr TermExpr::binary(Op op, TermExpr a, TermExpr b) {
  TermExpr e{op, {}, {}};
  e.args.push_back(std::move(a));
  e.args.push_back(std::move(b));
  return e;
}

std::size_t TermExpr::size() const {
  std::size_t n = 1;
  for (const auto& a : args) n += a.size();
  return n;
}

bool TermExpr::is_lattice() const {
  switch (op) {
    case Op::Plus:
    case Op::Times:
    case Op::Minus:
      return false;
    default:
      return std::all_of(args.begin(), args.end(), [](const TermExpr& a) { return a.is_lattice(); });
  }
}

Term normalize(const TermExpr& e) {
  switch (e.op) {
    case TermExpr::Op::Zero:
      return Term::zero();
    case TermExpr::Op::One:
      return Term::one();
    case TermExpr::Op::Var:
      return Term::variable(e.name);
    case TermExpr::Op::Not:
      return normalize(e.args.at(0)).complement();
    case TermExpr::Op::Meet:
    case TermExpr::Op::Times:
      return normalize(e.args.at(0)) * normalize(e.args.at(1));
    case TermExpr::Op::Join:
      return join(normalize(e.args.at(0)), normalize(e.args.at(1)));
    case TermExpr::Op::Plus:
      return normalize(e.args.at(0)) + normalize(e.args.at(1));
    case TermExpr::Op::Minus:
      return difference(normalize(e.args.at(0)), normalize(e.args.at(1)));
  }
  throw std::logic_error("unreachable term operator");
}

Term from_lattice(const TermExpr& expr) {
  if (!expr.is_lattice()) {
    throw std::invalid_argument("from_lattice: expression uses ring operators");
  }
  return normalize(expr);
}

}  // namespace baqe
