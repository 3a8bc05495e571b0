#include "baqe/descriptor.hpp"

#include <numeric>
#include <stdexcept>

namespace baqe {

namespace {

std::uint32_t minimal_cyclic_period(const std::vector<bool>& bits) {
  const auto n = static_cast<std::uint32_t>(bits.size());
  for (std::uint32_t d = 1; d < n; ++d) {
    if (n % d != 0) continue;
    bool ok = true;
    for (std::uint32_t i = d; i < n && ok; ++i) ok = bits[i] == bits[i - d];
    if (ok) return d;
  }
  return n;
}

std::vector<bool> lift(const ResidueConstraint& r, std::uint32_t n) {
  std::vector<bool> out(n);
  for (std::uint32_t i = 0; i < n; ++i) out[i] = r.allowed[i % r.modulus];
  return out;
}

}  // namespace

Descriptor::Descriptor(CountKind kind, std::uint64_t count, FinStatus fin, std::optional<ResidueConstraint> residue)
    : kind_(kind), count_(count), fin_(fin), residue_(std::move(residue)) {
  if (residue_ && (residue_->modulus == 0 || residue_->allowed.size() != residue_->modulus)) {
    throw std::invalid_argument("Descriptor: malformed residue constraint");
  }
  canonicalize();
}

Descriptor Descriptor::unsat() {
  Descriptor d;
  d.unsat_ = true;
  return d;
}

Descriptor Descriptor::residue(std::uint32_t n, const std::vector<std::uint32_t>& residues) {
  if (n == 0) throw std::invalid_argument("Descriptor::residue: modulus must be positive");
  ResidueConstraint r{n, std::vector<bool>(n, false)};
  for (auto s : residues) r.allowed[s % n] = true;
  return {CountKind::AtLeast, 0, FinStatus::MustFin, std::move(r)};
}

bool Descriptor::is_trivial() const {
  return !unsat_ && kind_ == CountKind::AtLeast && count_ == 0 && fin_ == FinStatus::Unconstrained && !residue_;
}

void Descriptor::canonicalize() {
  auto fail = [this] { *this = unsat(); };
  if (unsat_) return fail();
  if (residue_) {
    if (fin_ == FinStatus::MustNotFin) return fail();
    fin_ = FinStatus::MustFin;
    const std::uint32_t d = minimal_cyclic_period(residue_->allowed);
    residue_->allowed.resize(d);
    residue_->modulus = d;
    bool any = false;
    bool all = true;
    for (bool b : residue_->allowed) {
      any = any || b;
      all = all && b;
    }
    if (!any) return fail();
    if (all) residue_.reset();
  }
  if (kind_ == CountKind::Exact) {
    if (fin_ == FinStatus::MustNotFin) return fail();
    fin_ = FinStatus::MustFin;
    if (residue_) {
      if (!residue_->allowed[count_ % residue_->modulus]) return fail();
      residue_.reset();
    }
    return;
  }
  if (fin_ == FinStatus::MustNotFin) {
    count_ = 0;
    return;
  }
  if (residue_) {
    while (!residue_->allowed[count_ % residue_->modulus]) ++count_;
  }
}

std::string to_string(const Descriptor& d) {
  if (d.is_unsat()) return "Unsat";
  if (d.is_trivial()) return "Trivial";
  std::string out = d.count_kind() == Descriptor::CountKind::Exact ? "Exact(" : "AtLeast(";
  out += std::to_string(d.count()) + ")";
  if (d.fin() == FinStatus::MustFin) out += " MustFin";
  if (d.fin() == FinStatus::MustNotFin) out += " MustNotFin";
  if (const auto& r = d.residue_constraint()) {
    out += " mod " + std::to_string(r->modulus) + " in {";
    bool first = true;
    for (std::uint32_t s = 0; s < r->modulus; ++s) {
      if (!r->allowed[s]) continue;
      if (!first) out += ",";
      out += std::to_string(s);
      first = false;
    }
    out += "}";
  }
  return out;
}

Descriptor conjoin(const Descriptor& a, const Descriptor& b) {
  using CK = Descriptor::CountKind;
  if (a.is_unsat() || b.is_unsat()) return Descriptor::unsat();

  FinStatus fin = a.fin();
  if (b.fin() != FinStatus::Unconstrained) {
    if (fin != FinStatus::Unconstrained && fin != b.fin()) return Descriptor::unsat();
    fin = b.fin();
  }

  CK kind = CK::AtLeast;
  std::uint64_t count = std::max(a.count(), b.count());
  if (a.count_kind() == CK::Exact || b.count_kind() == CK::Exact) {
    kind = CK::Exact;
    if (a.count_kind() == CK::Exact && b.count_kind() == CK::Exact) {
      if (a.count() != b.count()) return Descriptor::unsat();
    } else {
      const Descriptor& e = a.count_kind() == CK::Exact ? a : b;
      const Descriptor& l = a.count_kind() == CK::Exact ? b : a;
      if (e.count() < l.count()) return Descriptor::unsat();
      count = e.count();
    }
  }

  std::optional<ResidueConstraint> residue;
  const auto& ra = a.residue_constraint();
  const auto& rb = b.residue_constraint();
  if (ra && rb) {
    const std::uint32_t n = std::lcm(ra->modulus, rb->modulus);
    auto x = lift(*ra, n);
    const auto y = lift(*rb, n);
    for (std::uint32_t i = 0; i < n; ++i) x[i] = x[i] && y[i];
    residue = ResidueConstraint{n, std::move(x)};
  } else if (ra) {
    residue = ra;
  } else if (rb) {
    residue = rb;
  }
  return Descriptor(kind, count, fin, std::move(residue));
}

CardSet denote(const Descriptor& d) {
  if (d.is_unsat()) return CardSet::empty();
  if (d.count_kind() == Descriptor::CountKind::Exact) return CardSet::exactly(d.count());
  CardSet base;
  switch (d.fin()) {
    case FinStatus::Unconstrained:
      base = CardSet::at_least(d.count());
      break;
    case FinStatus::MustFin:
      base = CardSet::finite_at_least(d.count());
      break;
    case FinStatus::MustNotFin:
      return CardSet::infinite();
  }
  if (const auto& r = d.residue_constraint()) base = base & CardSet::residues(r->allowed);
  return base;
}

std::vector<Descriptor> describe(const CardSet& s) {
  std::vector<Descriptor> out;
  if (s.is_empty()) return out;
  if (s.is_universe()) return {Descriptor::trivial()};
  const std::uint64_t t = s.threshold();
  for (std::uint64_t c = 0; c < t; ++c) {
    if (s.contains(c)) out.push_back(Descriptor::exact(c));
  }
  if (s.finite_cofinite() && s.has_infinite()) {
    out.push_back(Descriptor::at_least(t));
    return out;
  }
  const std::uint32_t n = s.period();
  ResidueConstraint tail{n, std::vector<bool>(n, false)};
  bool any = false;
  for (std::uint64_t c = t; c < t + n; ++c) {
    if (!s.contains(c)) continue;
    tail.allowed[c % n] = true;
    any = true;
  }
  if (any) out.emplace_back(Descriptor::CountKind::AtLeast, t, FinStatus::MustFin, std::move(tail));
  if (s.has_infinite()) out.push_back(Descriptor::must_not_fin());
  return out;
}

Descriptor atom_descriptor(const Atom& atom) {
  switch (atom.kind) {
    case AtomKind::IsZero:
      return Descriptor::exact(0);
    case AtomKind::AtLeast:
      return Descriptor::at_least(atom.index);
    case AtomKind::Fin:
      return Descriptor::must_fin();
    case AtomKind::Res:
      return Descriptor::residue(atom.modulus, {atom.residue});
  }
  throw std::logic_error("unreachable atom kind");
}

std::vector<Descriptor> negation_descriptors(const Atom& atom) {
  switch (atom.kind) {
    case AtomKind::IsZero:
      return {Descriptor::at_least(1)};
    case AtomKind::AtLeast: {
      std::vector<Descriptor> out;
      for (std::uint64_t e = 0; e < atom.index; ++e) out.push_back(Descriptor::exact(e));
      return out;
    }
    case AtomKind::Fin:
      return {Descriptor::must_not_fin()};
    case AtomKind::Res: {
      std::vector<Descriptor> out{Descriptor::must_not_fin()};
      std::vector<std::uint32_t> others;
      for (std::uint32_t s = 0; s < atom.modulus; ++s) {
        if (s != atom.residue) others.push_back(s);
      }
      const Descriptor rest = Descriptor::residue(atom.modulus, others);
      if (!rest.is_unsat()) out.push_back(rest);
      return out;
    }
  }
  throw std::logic_error("unreachable atom kind");
}

namespace {

Formula conj(Formula a, Formula b) {
  if (a.kind() == Formula::Kind::True) return b;
  if (b.kind() == Formula::Kind::True) return a;
  return Formula::conjunction(std::move(a), std::move(b));
}

Formula disj(Formula a, Formula b) {
  if (a.kind() == Formula::Kind::False) return b;
  if (b.kind() == Formula::Kind::False) return a;
  return Formula::disjunction(std::move(a), std::move(b));
}

}  // namespace

Formula to_formula(const Descriptor& d, const Term& t) {
  if (d.is_unsat()) return Formula::truth(false);
  if (d.is_trivial()) return Formula::truth(true);
  const auto k = d.count();
  if (d.count_kind() == Descriptor::CountKind::Exact) {
    if (k == 0) return Formula::is_zero(t);
    return conj(Formula::at_least(static_cast<std::uint32_t>(k), t),
                Formula::negation(Formula::at_least(static_cast<std::uint32_t>(k + 1), t)));
  }
  if (d.fin() == FinStatus::MustNotFin) return Formula::negation(Formula::fin(t));
  Formula count = k > 0 ? Formula::at_least(static_cast<std::uint32_t>(k), t) : Formula::truth(true);
  if (const auto& r = d.residue_constraint()) {
    Formula classes = Formula::truth(false);
    std::uint32_t least = r->modulus;
    for (std::uint32_t s = 0; s < r->modulus; ++s) {
      if (!r->allowed[s]) continue;
      least = std::min(least, s);
      classes = disj(classes, Formula::res(r->modulus, s, t));
    }
    if (k <= least) return classes;
    return conj(std::move(classes), std::move(count));
  }
  if (d.fin() == FinStatus::MustFin) return conj(Formula::fin(t), std::move(count));
  return count;
}

Formula to_formula(const CardSet& s, const Term& t) {
  Formula out = Formula::truth(false);
  for (const auto& d : describe(s)) out = disj(std::move(out), to_formula(d, t));
  return out;
}

Formula negate_atom(const Atom& atom) {
  Formula out = Formula::truth(false);
  for (const auto& d : negation_descriptors(atom)) out = disj(std::move(out), to_formula(d, atom.term));
  return out;
}

std::vector<Descriptor> project_split(const SplitSpec& spec) {
  if (!satisfiable(spec.first) || !satisfiable(spec.second)) {
    throw std::invalid_argument("project_split: unsatisfiable component");
  }
  return describe(sum(denote(spec.first), denote(spec.second)));
}

Formula project_split(const SplitSpec& spec, const Term& m) {
  Formula out = Formula::truth(false);
  for (const auto& d : project_split(spec)) out = disj(std::move(out), to_formula(d, m));
  return out;
}

namespace {

using Tables = std::vector<MintermTable>;

void compositions(std::uint64_t e, const std::vector<Minterm>& s, std::size_t i, MintermTable& cur, Tables& out) {
  if (i + 1 == s.size()) {
    cur[s[i]] = Descriptor::exact(e);
    out.push_back(cur);
    return;
  }
  for (std::uint64_t v = 0; v <= e; ++v) {
    cur[s[i]] = Descriptor::exact(v);
    compositions(e - v, s, i + 1, cur, out);
  }
}

// Disjoint cases on the first minterm whose running count reaches k.
void at_least_tables(std::uint64_t k, const std::vector<Minterm>& s, std::size_t i, MintermTable& cur, Tables& out) {
  if (k == 0) {
    out.push_back(cur);
    return;
  }
  cur[s[i]] = Descriptor::at_least(k);
  out.push_back(cur);
  if (i + 1 == s.size()) {
    cur.erase(s[i]);
    return;
  }
  for (std::uint64_t v = 0; v < k; ++v) {
    cur[s[i]] = Descriptor::exact(v);
    at_least_tables(k - v, s, i + 1, cur, out);
  }
  cur.erase(s[i]);
}

void residue_tables(const ResidueConstraint& r, const std::vector<Minterm>& s, std::size_t i, std::uint32_t acc,
                    MintermTable& cur, Tables& out) {
  const std::uint32_t n = r.modulus;
  if (i + 1 == s.size()) {
    std::vector<std::uint32_t> last;
    for (std::uint32_t x = 0; x < n; ++x) {
      if (r.allowed[(x + acc) % n]) last.push_back(x);
    }
    cur[s[i]] = Descriptor::residue(n, last);
    out.push_back(cur);
    return;
  }
  for (std::uint32_t rho = 0; rho < n; ++rho) {
    cur[s[i]] = Descriptor::residue(n, {rho});
    residue_tables(r, s, i + 1, (acc + rho) % n, cur, out);
  }
}

Tables cross(const Tables& a, const Tables& b) {
  Tables out;
  for (const auto& x : a) {
    for (const auto& y : b) {
      MintermTable merged = x;
      bool ok = true;
      for (const auto& [m, d] : y) {
        auto it = merged.find(m);
        if (it == merged.end()) {
          merged.emplace(m, d);
          continue;
        }
        it->second = conjoin(it->second, d);
        if (it->second.is_unsat()) {
          ok = false;
          break;
        }
      }
      if (ok) out.push_back(std::move(merged));
    }
  }
  return out;
}

}  // namespace

std::vector<MintermTable> distribute(const Descriptor& d, const std::vector<Minterm>& s) {
  if (d.is_unsat()) return {};
  if (s.empty()) return denote(d).contains(std::uint64_t{0}) ? Tables{MintermTable{}} : Tables{};
  if (d.is_trivial()) return {MintermTable{}};
  if (s.size() == 1) return {MintermTable{{s[0], d}}};

  std::vector<Tables> factors;
  MintermTable cur;
  if (d.count_kind() == Descriptor::CountKind::Exact) {
    Tables t;
    compositions(d.count(), s, 0, cur, t);
    factors.push_back(std::move(t));
  } else {
    if (d.count() > 0) {
      Tables t;
      at_least_tables(d.count(), s, 0, cur, t);
      factors.push_back(std::move(t));
    }
    if (d.fin() == FinStatus::MustFin && !d.residue_constraint()) {
      MintermTable all;
      for (auto m : s) all.emplace(m, Descriptor::must_fin());
      factors.push_back({all});
    }
    if (d.fin() == FinStatus::MustNotFin) {
      Tables t;
      for (std::size_t i = 0; i < s.size(); ++i) {
        MintermTable row;
        for (std::size_t j = 0; j < i; ++j) row.emplace(s[j], Descriptor::must_fin());
        row.emplace(s[i], Descriptor::must_not_fin());
        t.push_back(std::move(row));
      }
      factors.push_back(std::move(t));
    }
    if (const auto& r = d.residue_constraint()) {
      Tables t;
      residue_tables(*r, s, 0, 0, cur, t);
      factors.push_back(std::move(t));
    }
  }
  Tables out{MintermTable{}};
  for (const auto& f : factors) out = cross(out, f);
  return out;
}

std::vector<MintermTable> atom_tables(const Atom& atom, bool positive, const VarList& vars) {
  const auto s = minterms_below(atom.term, vars);
  if (positive) return distribute(atom_descriptor(atom), s);
  std::vector<MintermTable> out;
  for (const auto& d : negation_descriptors(atom)) {
    auto t = distribute(d, s);
    out.insert(out.end(), std::make_move_iterator(t.begin()), std::make_move_iterator(t.end()));
  }
  return out;
}

}  // namespace baqe
