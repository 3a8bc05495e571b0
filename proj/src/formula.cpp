#include "baqe/formula.hpp"

#include <algorithm>
#include <stdexcept>

namespace baqe {

std::string to_string(Level level) {
  switch (level) {
    case Level::L1:
      return "L1";
    case Level::L2:
      return "L2";
    case Level::L3:
      return "L3";
  }
  return "L?";
}

Level Atom::level() const {
  switch (kind) {
    case AtomKind::Fin:
      return Level::L2;
    case AtomKind::Res:
      return Level::L3;
    default:
      return Level::L1;
  }
}

struct Formula::Node {
  Kind kind = Kind::False;
  Atom atom;
  std::string var;
  std::vector<Formula> children;

  Level level = Level::L1;
  bool quantifier_free = true;
  std::size_t size = 1;
  std::size_t depth = 0;
  std::vector<std::string> free;
  std::vector<std::string> bound;
};

namespace {

using Strings = std::vector<std::string>;

Strings set_union(const Strings& a, const Strings& b) {
  Strings out;
  std::set_union(a.begin(), a.end(), b.begin(), b.end(), std::back_inserter(out));
  return out;
}

Strings set_intersection(const Strings& a, const Strings& b) {
  Strings out;
  std::set_intersection(a.begin(), a.end(), b.begin(), b.end(), std::back_inserter(out));
  return out;
}

bool contains(const Strings& s, const std::string& v) { return std::binary_search(s.begin(), s.end(), v); }

std::string fresh_name(const std::string& base, const Strings& used, const Strings& also_used) {
  for (std::size_t i = 1;; ++i) {
    std::string candidate = base + "_" + std::to_string(i);
    if (!contains(used, candidate) && !contains(also_used, candidate)) return candidate;
  }
}

Strings all_vars(const Formula& f) { return set_union(f.free_variables(), f.bound_variables()); }

std::size_t atom_size(const Atom& a) {
  // "t = 0" has two extra nodes; C[k](t), Fin(t), Res[n,r](t) one.
  return a.term.node_count() + (a.kind == AtomKind::IsZero ? 2 : 1);
}

}  // namespace

Formula::Formula() {
  static const auto false_node = [] {
    auto n = std::make_shared<Node>();
    n->kind = Kind::False;
    return std::shared_ptr<const Node>(std::move(n));
  }();
  node_ = false_node;
}

Formula Formula::truth(bool value) {
  static const auto true_node = [] {
    auto n = std::make_shared<Node>();
    n->kind = Kind::True;
    return std::shared_ptr<const Node>(std::move(n));
  }();
  if (!value) return Formula();
  return Formula(true_node);
}

Formula Formula::atom(Atom a) {
  switch (a.kind) {
    case AtomKind::IsZero:
      if (a.term.is_zero()) return truth(true);
      if (a.term.is_one()) return truth(false);
      a.index = a.modulus = a.residue = 0;
      break;
    case AtomKind::AtLeast:
      if (a.index == 0) throw std::invalid_argument("C_k requires k >= 1");
      a.modulus = a.residue = 0;
      break;
    case AtomKind::Fin:
      a.index = a.modulus = a.residue = 0;
      break;
    case AtomKind::Res:
      if (a.modulus == 0) throw std::invalid_argument("Res(n, r) requires n >= 1");
      a.residue %= a.modulus;
      a.index = 0;
      break;
  }
  auto n = std::make_shared<Node>();
  n->kind = Kind::Atom;
  n->level = a.level();
  n->size = atom_size(a);
  n->free = a.term.variables();
  n->atom = std::move(a);
  return Formula(std::shared_ptr<const Node>(std::move(n)));
}

Formula Formula::is_zero(Term t) { return atom(Atom{AtomKind::IsZero, 0, 0, 0, std::move(t)}); }

Formula Formula::at_least(std::uint32_t k, Term t) {
  return atom(Atom{AtomKind::AtLeast, k, 0, 0, std::move(t)});
}

Formula Formula::fin(Term t) { return atom(Atom{AtomKind::Fin, 0, 0, 0, std::move(t)}); }

Formula Formula::res(std::uint32_t n, std::int64_t r, Term t) {
  if (n == 0) throw std::invalid_argument("Res(n, r) requires n >= 1");
  const auto m = static_cast<std::int64_t>(n);
  const auto canonical = static_cast<std::uint32_t>(((r % m) + m) % m);
  return atom(Atom{AtomKind::Res, 0, n, canonical, std::move(t)});
}

Formula Formula::negation(Formula f) {
  auto n = std::make_shared<Node>();
  n->kind = Kind::Not;
  n->level = f.level();
  n->quantifier_free = f.is_quantifier_free();
  n->size = 1 + f.size();
  n->depth = f.quantifier_depth();
  n->free = f.free_variables();
  n->bound = f.bound_variables();
  n->children.push_back(std::move(f));
  return Formula(std::shared_ptr<const Node>(std::move(n)));
}

Formula Formula::binary(Kind kind, Formula a, Formula b) {
  if (kind != Kind::And && kind != Kind::Or && kind != Kind::Implies && kind != Kind::Iff) {
    throw std::invalid_argument("Formula::binary: not a binary connective");
  }
  // Keep binders unique across the two operands.
  const Strings vars_a = all_vars(a);
  const Strings vars_b = all_vars(b);
  Strings used = set_union(vars_a, vars_b);
  for (const auto& v : set_intersection(b.bound_variables(), vars_a)) {
    std::string fresh = fresh_name(v, used, {});
    used = set_union(used, {fresh});
    b = rename_variable(b, v, fresh);
  }
  for (const auto& v : set_intersection(a.bound_variables(), b.free_variables())) {
    std::string fresh = fresh_name(v, used, {});
    used = set_union(used, {fresh});
    a = rename_variable(a, v, fresh);
  }

  auto n = std::make_shared<Node>();
  n->kind = kind;
  n->level = std::max(a.level(), b.level());
  n->quantifier_free = a.is_quantifier_free() && b.is_quantifier_free();
  n->size = 1 + a.size() + b.size();
  n->depth = std::max(a.quantifier_depth(), b.quantifier_depth());
  n->free = set_union(a.free_variables(), b.free_variables());
  n->bound = set_union(a.bound_variables(), b.bound_variables());
  n->children.push_back(std::move(a));
  n->children.push_back(std::move(b));
  return Formula(std::shared_ptr<const Node>(std::move(n)));
}

Formula Formula::conjunction(Formula a, Formula b) { return binary(Kind::And, std::move(a), std::move(b)); }
Formula Formula::disjunction(Formula a, Formula b) { return binary(Kind::Or, std::move(a), std::move(b)); }
Formula Formula::implication(Formula a, Formula b) { return binary(Kind::Implies, std::move(a), std::move(b)); }
Formula Formula::biconditional(Formula a, Formula b) { return binary(Kind::Iff, std::move(a), std::move(b)); }

Formula Formula::quantifier(Kind kind, std::string var, Formula body) {
  if (kind != Kind::Exists && kind != Kind::Forall) {
    throw std::invalid_argument("Formula::quantifier: not a quantifier");
  }
  if (var.empty()) throw std::invalid_argument("Formula::quantifier: empty variable name");
  if (contains(body.bound_variables(), var)) {
    body = rename_variable(body, var, fresh_name(var, all_vars(body), {}));
  }
  auto n = std::make_shared<Node>();
  n->kind = kind;
  n->level = body.level();
  n->quantifier_free = false;
  n->size = 1 + body.size();
  n->depth = 1 + body.quantifier_depth();
  n->free = body.free_variables();
  n->free.erase(std::remove(n->free.begin(), n->free.end(), var), n->free.end());
  n->bound = set_union(body.bound_variables(), {var});
  n->var = std::move(var);
  n->children.push_back(std::move(body));
  return Formula(std::shared_ptr<const Node>(std::move(n)));
}

Formula Formula::exists(std::string var, Formula body) {
  return quantifier(Kind::Exists, std::move(var), std::move(body));
}

Formula Formula::forall(std::string var, Formula body) {
  return quantifier(Kind::Forall, std::move(var), std::move(body));
}

Formula::Kind Formula::kind() const { return node_->kind; }

bool Formula::is_binary() const {
  const Kind k = kind();
  return k == Kind::And || k == Kind::Or || k == Kind::Implies || k == Kind::Iff;
}

const Atom& Formula::atom() const {
  if (kind() != Kind::Atom) throw std::logic_error("Formula::atom on non-atom");
  return node_->atom;
}

const Formula& Formula::operand(std::size_t i) const {
  if (i >= node_->children.size() || is_quantifier()) throw std::logic_error("Formula::operand out of range");
  return node_->children[i];
}

const std::string& Formula::variable() const {
  if (!is_quantifier()) throw std::logic_error("Formula::variable on non-quantifier");
  return node_->var;
}

const Formula& Formula::body() const {
  if (!is_quantifier()) throw std::logic_error("Formula::body on non-quantifier");
  return node_->children[0];
}

Level Formula::level() const { return node_->level; }
bool Formula::is_quantifier_free() const { return node_->quantifier_free; }
const std::vector<std::string>& Formula::free_variables() const { return node_->free; }
const std::vector<std::string>& Formula::bound_variables() const { return node_->bound; }
std::size_t Formula::size() const { return node_->size; }
std::size_t Formula::quantifier_depth() const { return node_->depth; }

bool operator==(const Formula& a, const Formula& b) {
  if (a.node_ == b.node_) return true;
  const auto& x = *a.node_;
  const auto& y = *b.node_;
  if (x.kind != y.kind || x.size != y.size) return false;
  if (x.kind == Formula::Kind::Atom) return x.atom == y.atom;
  return x.var == y.var && x.children == y.children;
}

namespace {

template <class AtomFn>
Formula map_formula(const Formula& f, const AtomFn& on_atom, const std::string& old_binder,
                    const std::string& new_binder) {
  using K = Formula::Kind;
  switch (f.kind()) {
    case K::True:
    case K::False:
      return f;
    case K::Atom:
      return on_atom(f.atom());
    case K::Not:
      return Formula::negation(map_formula(f.operand(0), on_atom, old_binder, new_binder));
    case K::Exists:
    case K::Forall: {
      const std::string& v = f.variable() == old_binder ? new_binder : f.variable();
      return Formula::quantifier(f.kind(), v, map_formula(f.body(), on_atom, old_binder, new_binder));
    }
    default:
      return Formula::binary(f.kind(), map_formula(f.operand(0), on_atom, old_binder, new_binder),
                             map_formula(f.operand(1), on_atom, old_binder, new_binder));
  }
}

}  // namespace

Formula rename_variable(const Formula& f, const std::string& old_name, const std::string& fresh) {
  const Term replacement = Term::variable(fresh);
  return map_formula(
      f,
      [&](const Atom& a) {
        Atom b = a;
        b.term = a.term.substitute(old_name, replacement);
        return Formula::atom(std::move(b));
      },
      old_name, fresh);
}

Formula substitute(const Formula& f, const std::string& var, const Term& t) {
  if (!contains(f.free_variables(), var)) return f;
  Formula g = f;
  const Strings t_vars = t.variables();
  for (const auto& v : set_intersection(g.bound_variables(), t_vars)) {
    g = rename_variable(g, v, fresh_name(v, all_vars(g), t_vars));
  }
  return map_formula(
      g,
      [&](const Atom& a) {
        Atom b = a;
        b.term = a.term.substitute(var, t);
        return Formula::atom(std::move(b));
      },
      std::string{}, std::string{});
}

Formula universal_closure(const Formula& f) {
  Formula out = f;
  const auto& vars = f.free_variables();
  for (auto it = vars.rbegin(); it != vars.rend(); ++it) out = Formula::forall(*it, out);
  return out;
}

}  // namespace baqe
