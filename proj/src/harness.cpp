#include "baqe/harness.hpp"

#include <algorithm>
#include <map>
#include <mutex>
#include <set>
#include <stdexcept>

#include "baqe/minterm.hpp"
#include "baqe/syntax.hpp"

namespace baqe {

// ---------------------------------------------------------------- axioms

namespace {

std::string exactly(std::uint32_t m, const std::string& t) {
  if (m == 0) return "~C[1](" + t + ")";
  return "(C[" + std::to_string(m) + "](" + t + ") & ~C[" + std::to_string(m + 1) + "](" + t + "))";
}

std::string res(std::uint32_t n, std::uint32_t r, const std::string& t) {
  return "Res[" + std::to_string(n) + "," + std::to_string(r) + "](" + t + ")";
}

class AxiomList {
public:
  void add(const std::string& family, const std::string& text) {
    Formula f = parse(text);
    if (seen_.insert(print(f)).second) out_.push_back({family, std::move(f)});
  }
  std::vector<AxiomInstance> take() { return std::move(out_); }

private:
  std::set<std::string> seen_;
  std::vector<AxiomInstance> out_;
};

}  // namespace

std::vector<AxiomInstance> generate_axioms(const SchemaInstanceSpec& spec) {
  if (spec.bound < 1) throw std::invalid_argument("generate_axioms: bound must be at least 1");
  const std::uint32_t b = spec.bound;
  const auto lvl = static_cast<int>(spec.level);
  AxiomList list;
  using std::to_string;

  // Infinite atomic Boolean algebras with atom counting.
  list.add("T1.atomic", "A x (x != 0 -> E y (y <= x & y != 0 & A z (z <= y -> z = 0 | z = y)))");
  list.add("T1.atom", "A x (C[1](x) & ~C[2](x) <-> x != 0 & A z (z <= x -> z = 0 | z = x))");
  list.add("T1.zero", "A x (x = 0 <-> ~C[1](x))");
  list.add("T1.nontrivial", "0 != 1");
  for (std::uint32_t k = 1; k <= b; ++k) {
    const std::string ks = to_string(k);
    const std::string k1 = to_string(k + 1);
    list.add("T1.infinite", "C[" + ks + "](1)");
    list.add("T1.infinite", "E x " + exactly(k, "x"));
    list.add("T1.empty", "~C[" + ks + "](0)");
    list.add("T1.step", "A x (C[" + k1 + "](x) -> C[" + ks + "](x))");
    list.add("T1.count", "A x (C[" + k1 + "](x) <-> E y (y <= x & C[" + ks + "](y) & C[1](x - y)))");
    list.add("T1.monotone", "A x A y (x <= y & C[" + ks + "](x) -> C[" + ks + "](y))");
  }
  for (std::uint32_t i = 0; i <= b; ++i) {
    for (std::uint32_t j = 0; i + j <= b; ++j) {
      list.add("T1.additive",
               "A x A y (x . y = 0 & " + exactly(i, "x") + " & " + exactly(j, "y") + " -> " + exactly(i + j, "x | y") + ")");
    }
  }
  if (lvl >= 2) {
    list.add("T2.ideal", "Fin(0)");
    list.add("T2.ideal", "~Fin(1)");
    list.add("T2.ideal", "A x A y (Fin(x) & Fin(y) -> Fin(x | y))");
    list.add("T2.ideal", "A x A y (y <= x & Fin(x) -> Fin(y))");
    for (std::uint32_t n = 0; n <= b; ++n) {
      list.add("T2.basic", "A x (~C[" + to_string(n + 1) + "](x) -> Fin(x))");
    }
    list.add("T2.main", "A x (~Fin(x) -> E y (y < x & ~Fin(y) & ~Fin(x - y)))");
  }
  if (lvl >= 3) {
    for (std::uint32_t n = 1; n <= b; ++n) {
      list.add("T3.zero", res(n, 0, "0"));
      std::string cover;
      for (std::uint32_t r = 0; r < n; ++r) cover += (r ? " | " : "") + res(n, r, "x");
      list.add("T3.cover", "A x (Fin(x) -> " + cover + ")");
      for (std::uint32_t r = 0; r <= b; ++r) {
        list.add("T3.fin", "A x (" + res(n, r, "x") + " -> Fin(x))");
        for (std::uint32_t s = 0; s <= b; ++s) {
          if (r % n == s % n) {
            list.add("T3.congruent", "A x (" + res(n, r, "x") + " -> " + res(n, s, "x") + ")");
          } else {
            list.add("T3.exclusive", "A x (" + res(n, r, "x") + " -> ~" + res(n, s, "x") + ")");
          }
          list.add("T3.additivity", "A x A y (x . y = 0 & " + res(n, r, "x") + " & " + res(n, s, "y") + " -> " +
                                        res(n, r + s, "x | y") + ")");
        }
        std::string split;
        for (std::uint32_t s = 0; s < n; ++s) {
          const std::uint32_t t = (r % n + n - s) % n;
          split += (s ? " | " : "") + std::string("(") + res(n, s, "x") + " & " + res(n, t, "y") + ")";
        }
        list.add("T3.splitting", "A x A y (x . y = 0 & " + res(n, r, "x | y") + " -> " + split + ")");
      }
      for (std::uint32_t m = 0; m <= b; ++m) {
        list.add("T3.count", "A x (Fin(x) & " + exactly(m, "x") + " -> " + res(n, m % n, "x") + ")");
      }
    }
    for (std::uint32_t m = 1; m <= b; ++m) {
      for (std::uint32_t n = 1; n <= m; ++n) {
        if (m % n != 0) continue;
        for (std::uint32_t r = 0; r <= b; ++r) {
          list.add("T3.divisor", "A x (" + res(m, r, "x") + " -> " + res(n, r, "x") + ")");
        }
      }
    }
  }
  return list.take();
}

// ------------------------------------------------------- surface sizes

namespace {

// Cheapest renderings of Boolean functions of k variables, as truth tables
// indexed by minterm.
struct TermSizes {
  std::size_t k = 0;
  std::vector<std::size_t> term;      // by truth table
  std::vector<std::size_t> relation;  // cheapest "u = v" or "u <= v" with that zero set
};

constexpr std::size_t kUnreached = 1000;

TermSizes compute_sizes(std::size_t k) {
  if (k > 3) throw std::invalid_argument("surface sizes: at most three variables");
  TermSizes s;
  s.k = k;
  const std::size_t points = std::size_t{1} << k;
  const std::size_t count = std::size_t{1} << points;
  const std::uint32_t full = static_cast<std::uint32_t>(count - 1);
  s.term.assign(count, kUnreached);
  std::vector<std::vector<std::uint32_t>> by_size(2);
  auto reach = [&](std::uint32_t f, std::size_t size) {
    if (s.term[f] <= size) return;
    s.term[f] = size;
    if (by_size.size() <= size) by_size.resize(size + 1);
    by_size[size].push_back(f);
  };
  reach(0, 1);
  reach(full, 1);
  for (std::size_t i = 0; i < k; ++i) {
    std::uint32_t f = 0;
    for (std::size_t m = 0; m < points; ++m) {
      if ((m >> i) & 1u) f |= std::uint32_t{1} << m;
    }
    reach(f, 1);
  }
  for (std::size_t size = 2; size < 16; ++size) {
    if (by_size.size() <= size) by_size.resize(size + 1);
    for (auto f : std::vector<std::uint32_t>(by_size[size - 1])) {
      if (s.term[f] == size - 1) reach(~f & full, size);
    }
    for (std::size_t a = 1; a + 1 < size; ++a) {
      const std::size_t b = size - 1 - a;
      const auto left = by_size[a];
      const auto right = by_size[b];
      for (auto f : left) {
        if (s.term[f] != a) continue;
        for (auto g : right) {
          if (s.term[g] != b) continue;
          reach(f & g, size);
          reach(f | g, size);
          reach(f ^ g, size);
          reach(f & ~g & full, size);
        }
      }
    }
  }
  s.relation.assign(count, kUnreached);
  for (std::uint32_t u = 0; u < count; ++u) {
    for (std::uint32_t v = 0; v < count; ++v) {
      const std::size_t cost = s.term[u] + s.term[v] + 1;
      auto& eq = s.relation[u ^ v];
      eq = std::min(eq, cost);
      auto& le = s.relation[u & ~v & full];
      le = std::min(le, cost);
    }
  }
  return s;
}

const TermSizes& sizes_for(std::size_t k) {
  static std::mutex mu;
  static std::map<std::size_t, TermSizes> cache;
  const std::lock_guard lock(mu);
  auto it = cache.find(k);
  if (it == cache.end()) it = cache.emplace(k, compute_sizes(k)).first;
  return it->second;
}

std::uint32_t truth_table(const Term& t, const VarList& vars) {
  std::uint32_t f = 0;
  for (auto m : minterms_below(t, vars)) f |= std::uint32_t{1} << m;
  return f;
}

Term term_of(std::uint32_t table, const VarList& vars) {
  Term t;
  for (Minterm m = 0; m < minterm_count(vars); ++m) {
    if ((table >> m) & 1u) t = t + minterm_term(m, vars);
  }
  return t;
}

}  // namespace

std::size_t surface_size(const Formula& f) {
  using K = Formula::Kind;
  switch (f.kind()) {
    case K::True:
    case K::False:
      return 3;
    case K::Atom: {
      const Atom& a = f.atom();
      const VarList vars = a.term.variables();
      const TermSizes& s = sizes_for(vars.size());
      const std::uint32_t table = truth_table(a.term, vars);
      return a.kind == AtomKind::IsZero ? s.relation[table] : 1 + s.term[table];
    }
    case K::Not: {
      const Formula& g = f.operand(0);
      if (g.is_constant() || (g.is_atom() && g.atom().kind == AtomKind::IsZero)) return surface_size(g);
      return 1 + surface_size(g);
    }
    case K::Exists:
    case K::Forall:
      return 1 + surface_size(f.body());
    default:
      return 1 + surface_size(f.operand(0)) + surface_size(f.operand(1));
  }
}

// ----------------------------------------------------------- enumeration

std::vector<Formula> enumerate_formulas(const EnumerationSpec& spec) {
  const std::size_t max_depth = std::min(spec.max_quantifier_depth, spec.bound_names.size());
  const std::size_t budget = spec.size;
  struct Table {
    VarList scope;
    std::vector<std::vector<Formula>> by_size;
    std::vector<std::vector<std::string>> printed;
    std::set<std::string> seen;
  };
  std::vector<Table> tables;
  for (std::size_t d = 0; d <= max_depth; ++d) {
    VarList scope = spec.free_vars;
    scope.insert(scope.end(), spec.bound_names.begin(), spec.bound_names.begin() + static_cast<std::ptrdiff_t>(d));
    if (scope.size() > 3) break;
    tables.push_back({scope, std::vector<std::vector<Formula>>(budget + 1),
                      std::vector<std::vector<std::string>>(budget + 1), {}});
  }

  auto emit = [&](Table& t, std::size_t size, Formula f) {
    std::string key = print(f);
    if (!t.seen.insert(key).second) return;
    t.by_size[size].push_back(std::move(f));
    t.printed[size].push_back(std::move(key));
  };

  // Atoms, generated once per scope.
  for (auto& t : tables) {
    const TermSizes& s = sizes_for(t.scope.size());
    const auto count = static_cast<std::uint32_t>(s.term.size());
    for (std::uint32_t f = 0; f < count; ++f) {
      const Term term = term_of(f, t.scope);
      if (s.relation[f] <= budget) {
        emit(t, s.relation[f], Formula::is_zero(term));
        emit(t, s.relation[f], Formula::negation(Formula::is_zero(term)));
      }
      const std::size_t pred = 1 + s.term[f];
      if (pred > budget) continue;
      for (std::uint32_t k = 1; k <= spec.max_c; ++k) emit(t, pred, Formula::at_least(k, term));
      if (spec.level >= Level::L2 && spec.allow_fin) emit(t, pred, Formula::fin(term));
      if (spec.level >= Level::L3) {
        for (auto n : spec.res_moduli) {
          for (std::uint32_t r = 0; r < n; ++r) emit(t, pred, Formula::res(n, r, term));
        }
      }
    }
  }

  using K = Formula::Kind;
  for (std::size_t size = 2; size <= budget; ++size) {
    for (std::size_t d = 0; d < tables.size(); ++d) {
      Table& t = tables[d];
      for (std::size_t i = 0; i < t.by_size[size - 1].size(); ++i) {
        emit(t, size, Formula::negation(t.by_size[size - 1][i]));
      }
      for (std::size_t a = 1; a + 1 < size; ++a) {
        const std::size_t b = size - 1 - a;
        for (std::size_t i = 0; i < t.by_size[a].size(); ++i) {
          for (std::size_t j = 0; j < t.by_size[b].size(); ++j) {
            const std::string& pa = t.printed[a][i];
            const std::string& pb = t.printed[b][j];
            if (pa == pb) continue;
            const Formula& x = t.by_size[a][i];
            const Formula& y = t.by_size[b][j];
            if (pa < pb) {
              emit(t, size, Formula::binary(K::And, x, y));
              emit(t, size, Formula::binary(K::Or, x, y));
              emit(t, size, Formula::binary(K::Iff, x, y));
            }
            emit(t, size, Formula::binary(K::Implies, x, y));
          }
        }
      }
      if (d + 1 < tables.size()) {
        const std::string& v = spec.bound_names[d];
        for (const auto& body : tables[d + 1].by_size[size - 1]) {
          const auto& fv = body.free_variables();
          if (!std::binary_search(fv.begin(), fv.end(), v)) continue;
          emit(t, size, Formula::exists(v, body));
          emit(t, size, Formula::forall(v, body));
        }
      }
    }
  }

  std::vector<Formula> out;
  for (auto& bucket : tables.front().by_size) {
    for (auto& f : bucket) out.push_back(std::move(f));
  }
  return out;
}

// --------------------------------------------------------------- defcheck

DefcheckResult defcheck(const Formula& target, const std::vector<Formula>& candidates,
                        const std::function<void(std::size_t)>& progress) {
  DefcheckResult out;
  Engine engine(theory_for(target.level()));
  for (const auto& c : candidates) {
    ++out.checked;
    const bool same = engine.equivalent(c, target);
    if (progress) progress(out.checked);
    if (same) {
      out.definable = true;
      out.definition = c;
      return out;
    }
  }
  return out;
}

DefcheckResult defcheck(const Formula& target, const EnumerationSpec& spec) {
  return defcheck(target, enumerate_formulas(spec));
}

// ------------------------------------------------------- random formulas

std::uint64_t FormulaGenerator::below(std::uint64_t n) {
  if (n == 0) throw std::invalid_argument("FormulaGenerator::below: empty range");
  const std::uint64_t limit = UINT64_MAX - UINT64_MAX % n;
  while (true) {
    const std::uint64_t r = rng_();
    if (r < limit) return r % n;
  }
}

Term FormulaGenerator::term(const std::vector<std::string>& scope) {
  if (scope.empty() || below(12) == 0) return below(2) ? Term::one() : Term::zero();
  auto var = [&] { return Term::variable(scope[below(scope.size())]); };
  switch (below(8)) {
    case 0:
    case 1:
    case 2:
      return var();
    case 3:
      return var().complement();
    case 4:
      return var() * var();
    case 5:
      return var() + var();
    case 6:
      return join(var(), var());
    default:
      return var() * var().complement();
  }
}

Formula FormulaGenerator::atom(const std::vector<std::string>& scope, const RandomFormulaSpec& spec) {
  const std::uint64_t kinds = spec.level >= Level::L3 ? 4 : spec.level >= Level::L2 ? 3 : 2;
  switch (below(kinds)) {
    case 0: {
      const Term a = term(scope);
      const Term b = below(2) ? Term::zero() : term(scope);
      return below(3) == 0 ? Formula::negation(Formula::is_zero(a + b)) : Formula::is_zero(a + b);
    }
    case 1:
      return Formula::at_least(static_cast<std::uint32_t>(1 + below(spec.max_c)), term(scope));
    case 2:
      return Formula::fin(term(scope));
    default: {
      const std::uint32_t n = spec.res_moduli.empty() ? 2 : spec.res_moduli[below(spec.res_moduli.size())];
      return Formula::res(n, static_cast<std::int64_t>(below(n)), term(scope));
    }
  }
}

Formula FormulaGenerator::formula(std::vector<std::string>& scope, std::size_t depth, std::size_t budget,
                                  const RandomFormulaSpec& spec) {
  const bool can_bind = depth < spec.max_quantifier_depth && scope.size() < spec.max_vars;
  const std::uint64_t roll = below(100);
  // With nothing in scope the only atoms are about 0 and 1, so bind early.
  const bool bind = can_bind && budget > 3 && (scope.empty() ? roll < 75 : roll >= 55);
  if (!bind && (budget <= 3 || roll < 20)) return atom(scope, spec);
  if (!bind && roll < 30) return Formula::negation(formula(scope, depth, budget - 1, spec));
  if (!bind) {
    const std::size_t left = 1 + below(budget - 2);
    Formula a = formula(scope, depth, left, spec);
    Formula b = formula(scope, depth, budget - 1 - std::min(left, budget - 2), spec);
    static constexpr Formula::Kind ops[] = {Formula::Kind::And, Formula::Kind::Or, Formula::Kind::Implies,
                                            Formula::Kind::Iff};
    return Formula::binary(ops[below(4)], std::move(a), std::move(b));
  }
  std::string v;
  for (const auto& name : spec.bound_vars) {
    if (std::find(scope.begin(), scope.end(), name) == scope.end()) {
      v = name;
      break;
    }
  }
  if (v.empty()) return atom(scope, spec);
  scope.push_back(v);
  Formula body = formula(scope, depth + 1, budget - 1, spec);
  const auto& fv = body.free_variables();
  if (!std::binary_search(fv.begin(), fv.end(), v)) {
    Formula extra = Formula::at_least(1, Term::variable(v));
    for (int tries = 0; tries < 8; ++tries) {
      extra = atom(scope, spec);
      const auto& ev = extra.free_variables();
      if (std::binary_search(ev.begin(), ev.end(), v)) break;
    }
    const auto& ev = extra.free_variables();
    if (!std::binary_search(ev.begin(), ev.end(), v)) extra = Formula::at_least(1, Term::variable(v));
    body = below(2) ? Formula::conjunction(extra, body) : Formula::disjunction(extra, body);
  }
  scope.pop_back();
  return below(2) ? Formula::exists(v, std::move(body)) : Formula::forall(v, std::move(body));
}

Formula FormulaGenerator::next(const RandomFormulaSpec& spec) {
  while (true) {
    std::vector<std::string> scope;
    if (!spec.sentence) {
      for (const auto& v : spec.free_vars) {
        if (scope.size() + 1 < spec.max_vars && below(3) != 0) scope.push_back(v);
      }
      if (scope.empty() && !spec.free_vars.empty()) scope.push_back(spec.free_vars.front());
    }
    Formula f = formula(scope, 0, spec.max_size, spec);
    if (f.size() > spec.max_size || f.quantifier_depth() > spec.max_quantifier_depth) continue;
    if (spec.sentence && !f.is_sentence()) continue;
    // Keep a quarter of the quantifier-free draws when quantifiers are allowed.
    if (spec.max_quantifier_depth > 0 && f.quantifier_depth() == 0 && below(4) != 0) continue;
    if (!admits(theory_for(spec.level), f.level())) continue;
    return f;
  }
}

}  // namespace baqe
