#include "baqe/model.hpp"

#include <algorithm>
#include <array>
#include <bit>
#include <map>
#include <mutex>
#include <numeric>
#include <tuple>

namespace baqe {

EPSet eval_term(const Term& t, const Assignment& sigma) {
  EPSet out;
  for (const auto& mono : t.monomials()) {
    EPSet product = EPSet::full();
    for (const auto& v : mono) {
      auto it = sigma.find(v);
      if (it == sigma.end()) throw MissingVariable(v);
      product = ring_product(product, it->second);
    }
    out = ring_sum(out, product);
  }
  return out;
}

bool eval_atom(const Atom& a, const Assignment& sigma) {
  const EPSet value = eval_term(a.term, sigma);
  const Cardinal c = card(value);
  switch (a.kind) {
    case AtomKind::IsZero:
      return value == EPSet();
    case AtomKind::AtLeast:
      return c.infinite || c.value >= a.index;
    case AtomKind::Fin:
      return !c.infinite;
    case AtomKind::Res: {
      const auto r = residue(value, a.modulus);
      return r && *r == a.residue;
    }
  }
  return false;
}

bool eval_qf(const Formula& f, const Assignment& sigma) {
  using K = Formula::Kind;
  switch (f.kind()) {
    case K::True:
      return true;
    case K::False:
      return false;
    case K::Atom:
      return eval_atom(f.atom(), sigma);
    case K::Not:
      return !eval_qf(f.operand(0), sigma);
    case K::And:
      return eval_qf(f.operand(0), sigma) && eval_qf(f.operand(1), sigma);
    case K::Or:
      return eval_qf(f.operand(0), sigma) || eval_qf(f.operand(1), sigma);
    case K::Implies:
      return !eval_qf(f.operand(0), sigma) || eval_qf(f.operand(1), sigma);
    case K::Iff:
      return eval_qf(f.operand(0), sigma) == eval_qf(f.operand(1), sigma);
    default:
      throw std::invalid_argument("eval_qf: formula has quantifiers");
  }
}

std::string to_string(Truth t) {
  switch (t) {
    case Truth::True:
      return "true";
    case Truth::False:
      return "false";
    default:
      return "unknown";
  }
}

const std::vector<EPSet>& candidates(const SearchBounds& bounds) {
  static std::mutex mu;
  static std::map<std::tuple<std::uint32_t, std::uint32_t, SamplingMode>, std::vector<EPSet>> cache;
  const std::lock_guard lock(mu);
  auto key = std::make_tuple(bounds.max_transient, bounds.max_period, bounds.mode);
  auto it = cache.find(key);
  if (it != cache.end()) return it->second;

  std::vector<EPSet> out;
  // Subsets of [0, n) as sorted lists in lexicographic order.
  auto subsets = [](std::uint64_t n) {
    std::vector<std::vector<std::uint64_t>> all;
    std::vector<std::uint64_t> cur;
    auto rec = [&](auto&& self, std::uint64_t from) -> void {
      all.push_back(cur);
      for (std::uint64_t x = from; x < n; ++x) {
        cur.push_back(x);
        self(self, x + 1);
        cur.pop_back();
      }
    };
    rec(rec, 0);
    return all;
  };
  const std::uint32_t max_p = bounds.mode == SamplingMode::FiniteCofinite ? 1 : bounds.max_period;
  for (std::uint64_t t = 0; t <= bounds.max_transient; ++t) {
    const auto transients = subsets(t);
    for (std::uint64_t p = 1; p <= max_p; ++p) {
      const auto residue_sets = subsets(p);
      for (const auto& tr : transients) {
        for (const auto& r : residue_sets) {
          EPSet s = EPSet::make(tr, t, p, r);
          if (s.threshold() == t && s.period() == p) out.push_back(std::move(s));
        }
      }
    }
  }
  return cache.emplace(key, std::move(out)).first->second;
}

namespace {

// Formula compiled against variable slots; monomials become slot bitmasks.
struct Plan {
  Formula::Kind kind = Formula::Kind::False;
  Atom atom;
  std::vector<std::uint32_t> monomials;
  std::size_t slot = 0;
  std::vector<Plan> kids;
};

Plan build(const Formula& f, std::map<std::string, std::size_t>& slots) {
  Plan p;
  p.kind = f.kind();
  switch (f.kind()) {
    case Formula::Kind::True:
    case Formula::Kind::False:
      break;
    case Formula::Kind::Atom:
      p.atom = f.atom();
      for (const auto& mono : f.atom().term.monomials()) {
        std::uint32_t mask = 0;
        for (const auto& v : mono) mask |= std::uint32_t{1} << slots.at(v);
        p.monomials.push_back(mask);
      }
      break;
    case Formula::Kind::Exists:
    case Formula::Kind::Forall: {
      const std::size_t slot = slots.size();
      if (slot >= 32) throw std::invalid_argument("eval_bounded: too many variables");
      slots[f.variable()] = slot;
      p.slot = slot;
      p.kids.push_back(build(f.body(), slots));
      slots.erase(f.variable());
      break;
    }
    case Formula::Kind::Not:
      p.kids.push_back(build(f.operand(0), slots));
      break;
    default:
      p.kids.push_back(build(f.operand(0), slots));
      p.kids.push_back(build(f.operand(1), slots));
  }
  return p;
}

std::size_t max_slots(const Plan& p, std::size_t base) {
  std::size_t n = base;
  if (p.kind == Formula::Kind::Exists || p.kind == Formula::Kind::Forall) n = std::max(n, p.slot + 1);
  for (const auto& k : p.kids) n = std::max(n, max_slots(k, n));
  return n;
}

// Sets restricted to [0, T + L) where every set involved has threshold <= T
// and period dividing L; the segment [T, T + L) is then one full period.
constexpr std::size_t kWindowWords = 4;
constexpr std::size_t kWindowBits = 64 * kWindowWords;

struct Window {
  std::array<std::uint64_t, kWindowWords> w{};
  friend bool operator==(const Window&, const Window&) = default;
};

struct WindowAlgebra {
  using Value = Window;
  std::uint64_t head;
  std::uint64_t period;
  Window ones;
  Window head_mask;
  Window tail_mask;

  WindowAlgebra(std::uint64_t t, std::uint64_t l) : head(t), period(l) {
    for (std::uint64_t n = 0; n < t + l; ++n) {
      set(ones, n);
      set(n < t ? head_mask : tail_mask, n);
    }
  }
  static void set(Window& x, std::uint64_t n) { x.w[n / 64] |= std::uint64_t{1} << (n % 64); }
  Window embed(const EPSet& s) const {
    Window x;
    for (std::uint64_t n = 0; n < head + period; ++n) {
      if (s.contains(n)) set(x, n);
    }
    return x;
  }
  Window one() const { return ones; }
  static Window zero() { return {}; }
  static void meet(Window& a, const Window& b) {
    for (std::size_t i = 0; i < kWindowWords; ++i) a.w[i] &= b.w[i];
  }
  static void add(Window& a, const Window& b) {
    for (std::size_t i = 0; i < kWindowWords; ++i) a.w[i] ^= b.w[i];
  }
  static bool is_zero(const Window& a) {
    return std::all_of(a.w.begin(), a.w.end(), [](std::uint64_t x) { return x == 0; });
  }
  Cardinal card(const Window& a) const {
    std::uint64_t count = 0;
    for (std::size_t i = 0; i < kWindowWords; ++i) {
      if (a.w[i] & tail_mask.w[i]) return Cardinal::omega();
      count += static_cast<std::uint64_t>(std::popcount(a.w[i] & head_mask.w[i]));
    }
    return Cardinal::finite(count);
  }
};

struct SetAlgebra {
  using Value = EPSet;
  static EPSet embed(const EPSet& s) { return s; }
  static EPSet one() { return EPSet::full(); }
  static EPSet zero() { return {}; }
  static void meet(EPSet& a, const EPSet& b) { a = ring_product(a, b); }
  static void add(EPSet& a, const EPSet& b) { a = ring_sum(a, b); }
  static bool is_zero(const EPSet& a) { return a == EPSet(); }
  static Cardinal card(const EPSet& a) { return baqe::card(a); }
};

Truth t_not(Truth a) {
  if (a == Truth::Unknown) return a;
  return a == Truth::True ? Truth::False : Truth::True;
}

Truth t_and(Truth a, Truth b) {
  if (a == Truth::False || b == Truth::False) return Truth::False;
  if (a == Truth::True && b == Truth::True) return Truth::True;
  return Truth::Unknown;
}

Truth t_or(Truth a, Truth b) { return t_not(t_and(t_not(a), t_not(b))); }

template <class Algebra>
struct Evaluator {
  using Value = typename Algebra::Value;

  const Algebra& alg;
  const std::vector<Value>& domain;
  std::vector<Value> slots;

  Value term(const Plan& p) const {
    Value out = Algebra::zero();
    for (auto mask : p.monomials) {
      Value m = alg.one();
      for (std::uint32_t rest = mask; rest; rest &= rest - 1) Algebra::meet(m, slots[std::countr_zero(rest)]);
      Algebra::add(out, m);
    }
    return out;
  }

  bool atom(const Plan& p) const {
    const Value v = term(p);
    const Atom& a = p.atom;
    if (a.kind == AtomKind::IsZero) return Algebra::is_zero(v);
    const Cardinal c = alg.card(v);
    switch (a.kind) {
      case AtomKind::AtLeast:
        return c.infinite || c.value >= a.index;
      case AtomKind::Fin:
        return !c.infinite;
      case AtomKind::Res:
        return !c.infinite && c.value % a.modulus == a.residue;
      default:
        return false;
    }
  }

  Truth eval(const Plan& p) {
    using K = Formula::Kind;
    switch (p.kind) {
      case K::True:
        return Truth::True;
      case K::False:
        return Truth::False;
      case K::Atom:
        return truth_of(atom(p));
      case K::Not:
        return t_not(eval(p.kids[0]));
      case K::And: {
        const Truth a = eval(p.kids[0]);
        if (a == Truth::False) return a;
        return t_and(a, eval(p.kids[1]));
      }
      case K::Or: {
        const Truth a = eval(p.kids[0]);
        if (a == Truth::True) return a;
        return t_or(a, eval(p.kids[1]));
      }
      case K::Implies: {
        const Truth a = eval(p.kids[0]);
        if (a == Truth::False) return Truth::True;
        return t_or(t_not(a), eval(p.kids[1]));
      }
      case K::Iff: {
        const Truth a = eval(p.kids[0]);
        const Truth b = eval(p.kids[1]);
        if (a == Truth::Unknown || b == Truth::Unknown) return Truth::Unknown;
        return truth_of(a == b);
      }
      case K::Exists:
        return first_hit(p, Truth::True) ? Truth::True : Truth::Unknown;
      case K::Forall:
        return first_hit(p, Truth::False) ? Truth::False : Truth::Unknown;
    }
    return Truth::Unknown;
  }

  // Index of the first domain element making the body evaluate to target.
  std::optional<std::size_t> first_hit(const Plan& p, Truth target) {
    for (std::size_t i = 0; i < domain.size(); ++i) {
      slots[p.slot] = domain[i];
      if (eval(p.kids[0]) == target) return i;
    }
    return std::nullopt;
  }
};

struct Prepared {
  Plan plan;
  std::vector<EPSet> free_values;  // by slot
  bool quantified = false;
};

Prepared prepare(const Formula& f, const Assignment& sigma) {
  Prepared out;
  std::map<std::string, std::size_t> slots;
  for (const auto& v : f.free_variables()) {
    auto it = sigma.find(v);
    if (it == sigma.end()) throw MissingVariable(v);
    slots[v] = out.free_values.size();
    out.free_values.push_back(it->second);
  }
  out.plan = build(f, slots);
  out.quantified = !f.is_quantifier_free();
  return out;
}

// Runs fn with an evaluator over windows when everything fits, else over
// EPSets directly.
template <class Fn>
auto with_evaluator(const Prepared& prep, const SearchBounds& bounds, Fn&& fn) {
  const auto& domain = candidates(bounds);
  std::uint64_t head = 0;
  std::uint64_t period = 1;
  for (const auto& s : prep.free_values) {
    head = std::max(head, s.threshold());
    period = std::lcm(period, s.period());
  }
  if (prep.quantified) {
    head = std::max<std::uint64_t>(head, bounds.max_transient);
    const std::uint64_t max_p = bounds.mode == SamplingMode::FiniteCofinite ? 1 : bounds.max_period;
    for (std::uint64_t p = 1; p <= max_p; ++p) period = std::lcm(period, p);
  }
  const std::size_t slot_count = max_slots(prep.plan, prep.free_values.size());
  if (head + period <= kWindowBits) {
    static std::mutex mu;
    static std::map<std::tuple<std::uint32_t, std::uint32_t, SamplingMode, std::uint64_t, std::uint64_t>,
                    std::vector<Window>>
        cache;
    const WindowAlgebra alg(head, period);
    const std::vector<Window>* windows = nullptr;
    {
      const std::lock_guard lock(mu);
      auto key = std::make_tuple(bounds.max_transient, bounds.max_period, bounds.mode, head, period);
      auto it = cache.find(key);
      if (it == cache.end() && prep.quantified) {
        std::vector<Window> w;
        w.reserve(domain.size());
        for (const auto& s : domain) w.push_back(alg.embed(s));
        it = cache.emplace(key, std::move(w)).first;
      }
      static const std::vector<Window> none;
      windows = it == cache.end() ? &none : &it->second;
    }
    Evaluator<WindowAlgebra> ev{alg, *windows, std::vector<Window>(slot_count)};
    for (std::size_t i = 0; i < prep.free_values.size(); ++i) ev.slots[i] = alg.embed(prep.free_values[i]);
    return fn(ev);
  }
  const SetAlgebra alg;
  Evaluator<SetAlgebra> ev{alg, domain, std::vector<EPSet>(slot_count)};
  for (std::size_t i = 0; i < prep.free_values.size(); ++i) ev.slots[i] = prep.free_values[i];
  return fn(ev);
}

}  // namespace

Truth eval_bounded(const Formula& f, const Assignment& sigma, const SearchBounds& bounds) {
  const Prepared prep = prepare(f, sigma);
  return with_evaluator(prep, bounds, [&](auto& ev) { return ev.eval(prep.plan); });
}

std::optional<EPSet> witness_search(const Formula& f, const Assignment& sigma, const SearchBounds& bounds) {
  if (f.kind() != Formula::Kind::Exists) throw std::invalid_argument("witness_search: expected E x p");
  const Prepared prep = prepare(f, sigma);
  const auto hit = with_evaluator(prep, bounds, [&](auto& ev) { return ev.first_hit(prep.plan, Truth::True); });
  if (!hit) return std::nullopt;
  return candidates(bounds)[*hit];
}

std::uint64_t EPSampler::below(std::uint64_t n) {
  if (n == 0) throw std::invalid_argument("EPSampler::below: empty range");
  const std::uint64_t limit = UINT64_MAX - UINT64_MAX % n;
  while (true) {
    const std::uint64_t r = rng_();
    if (r < limit) return r % n;
  }
}

EPSet EPSampler::next(const SearchBounds& bounds) {
  const bool proper_possible = bounds.mode == SamplingMode::All && bounds.max_period >= 2;
  const std::uint64_t kind = below(proper_possible ? 3 : 2);
  const std::uint64_t t = below(std::uint64_t{bounds.max_transient} + 1);
  std::vector<std::uint64_t> transient;
  for (std::uint64_t n = 0; n < t; ++n) {
    if (below(2)) transient.push_back(n);
  }
  if (kind == 0) return EPSet::make(std::move(transient), t, 1, {});
  if (kind == 1) return EPSet::make(std::move(transient), t, 1, {0});
  const std::uint64_t p = 2 + below(bounds.max_period - 1);
  std::vector<std::uint64_t> r;
  while (r.empty() || r.size() == p) {
    r.clear();
    for (std::uint64_t x = 0; x < p; ++x) {
      if (below(2)) r.push_back(x);
    }
  }
  return EPSet::make(std::move(transient), t, p, std::move(r));
}

Assignment EPSampler::assignment(const std::vector<std::string>& vars, const SearchBounds& bounds) {
  Assignment out;
  for (const auto& v : vars) out[v] = next(bounds);
  return out;
}

EPSet random_ep(std::uint64_t seed, const SearchBounds& bounds) { return EPSampler(seed).next(bounds); }

}  // namespace baqe
