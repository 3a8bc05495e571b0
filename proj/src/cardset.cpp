#include "baqe/cardset.hpp"

#include <algorithm>
#include <numeric>
#include <stdexcept>

namespace baqe {

namespace {

struct View {
  std::uint32_t t;
  std::uint32_t n;
  const std::vector<bool>* bits;

  bool operator()(std::uint64_t c) const {
    if (c < t) return (*bits)[c];
    return (*bits)[t + (c - t) % n];
  }
};

}  // namespace

CardSet::CardSet() : bits_{false} {}

CardSet CardSet::universe() {
  CardSet s;
  s.bits_ = {true};
  s.infinite_ = true;
  return s;
}

CardSet CardSet::exactly(std::uint64_t e) {
  std::vector<bool> bits(e + 2, false);
  bits[e] = true;
  return from_bits(static_cast<std::uint32_t>(e + 1), 1, std::move(bits), false);
}

CardSet CardSet::at_least(std::uint64_t k) {
  CardSet s = finite_at_least(k);
  s.infinite_ = true;
  return s;
}

CardSet CardSet::finite_at_least(std::uint64_t k) {
  std::vector<bool> bits(k + 1, false);
  bits[k] = true;
  return from_bits(static_cast<std::uint32_t>(k), 1, std::move(bits), false);
}

CardSet CardSet::infinite() {
  CardSet s;
  s.infinite_ = true;
  return s;
}

CardSet CardSet::residues(const std::vector<bool>& allowed) {
  if (allowed.empty()) throw std::invalid_argument("CardSet::residues: modulus must be positive");
  return from_bits(0, static_cast<std::uint32_t>(allowed.size()), allowed, false);
}

CardSet CardSet::from_bits(std::uint32_t threshold, std::uint32_t period, std::vector<bool> bits, bool infinite) {
  if (period == 0 || bits.size() != std::size_t{threshold} + period) {
    throw std::invalid_argument("CardSet::from_bits: inconsistent layout");
  }
  CardSet s;
  s.threshold_ = threshold;
  s.period_ = period;
  s.bits_ = std::move(bits);
  s.infinite_ = infinite;
  s.canonicalize();
  return s;
}

void CardSet::canonicalize() {
  const View old{threshold_, period_, &bits_};
  std::uint32_t d = period_;
  for (std::uint32_t cand = 1; cand < period_; ++cand) {
    if (period_ % cand != 0) continue;
    bool ok = true;
    for (std::uint32_t i = 0; i < period_ && ok; ++i) ok = old(threshold_ + i) == old(threshold_ + i % cand);
    if (ok) {
      d = cand;
      break;
    }
  }
  std::uint32_t t = threshold_;
  while (t > 0 && old(t - 1) == old(t - 1 + d)) --t;
  std::vector<bool> bits(std::size_t{t} + d);
  for (std::uint32_t c = 0; c < t + d; ++c) bits[c] = old(c);
  threshold_ = t;
  period_ = d;
  bits_ = std::move(bits);
}

bool CardSet::contains(std::uint64_t c) const { return View{threshold_, period_, &bits_}(c); }

bool CardSet::finite_empty() const { return threshold_ == 0 && period_ == 1 && !bits_[0]; }

bool CardSet::finite_cofinite() const { return period_ == 1 && bits_[threshold_]; }

std::optional<std::uint64_t> CardSet::min_finite() const {
  for (std::uint64_t c = 0; c < bits_.size(); ++c) {
    if (bits_[c]) return c;
  }
  return std::nullopt;
}

namespace {

template <class Op>
CardSet combine(const CardSet& a, const CardSet& b, bool infinite, Op op) {
  const std::uint32_t t = std::max(a.threshold(), b.threshold());
  const std::uint32_t n = std::lcm(a.period(), b.period());
  std::vector<bool> bits(std::size_t{t} + n);
  for (std::uint32_t c = 0; c < t + n; ++c) bits[c] = op(a.contains(std::uint64_t{c}), b.contains(std::uint64_t{c}));
  return CardSet::from_bits(t, n, std::move(bits), infinite);
}

}  // namespace

CardSet operator&(const CardSet& a, const CardSet& b) {
  return combine(a, b, a.infinite_ && b.infinite_, [](bool x, bool y) { return x && y; });
}

CardSet operator|(const CardSet& a, const CardSet& b) {
  return combine(a, b, a.infinite_ || b.infinite_, [](bool x, bool y) { return x || y; });
}

CardSet CardSet::operator~() const {
  CardSet s = *this;
  s.bits_.flip();
  s.infinite_ = !infinite_;
  return s;
}

// With L = lcm of the periods, every c >= Ta + Tb + 2L satisfies
// c in A+B  <=>  c - L in A+B: a decomposition c = a + b has a >= Ta + L or
// b >= Tb + L, so L can be moved off that summand and back. The sumset is
// therefore fixed by its members below Ta + Tb + 3L.
CardSet sum(const CardSet& a, const CardSet& b) {
  const bool infinite = (a.infinite_ && !b.is_empty()) || (b.infinite_ && !a.is_empty());
  if (a.finite_empty() || b.finite_empty()) {
    CardSet s;
    s.infinite_ = infinite;
    return s;
  }
  const std::uint32_t n = std::lcm(a.period_, b.period_);
  const std::uint32_t t = a.threshold_ + b.threshold_ + 2 * n;
  const std::uint32_t limit = t + n;
  std::vector<std::uint32_t> a_members;
  for (std::uint32_t c = 0; c < limit; ++c) {
    if (a.contains(std::uint64_t{c})) a_members.push_back(c);
  }
  std::vector<bool> b_bits(limit);
  for (std::uint32_t c = 0; c < limit; ++c) b_bits[c] = b.contains(std::uint64_t{c});
  std::vector<bool> bits(limit, false);
  for (auto x : a_members) {
    for (std::uint32_t c = x; c < limit; ++c) {
      if (b_bits[c - x]) bits[c] = true;
    }
  }
  return CardSet::from_bits(t, n, std::move(bits), infinite);
}

bool CardSet::subset_of(const CardSet& other) const {
  if (infinite_ && !other.infinite_) return false;
  const std::uint32_t t = std::max(threshold_, other.threshold_);
  const std::uint32_t n = std::lcm(period_, other.period_);
  for (std::uint64_t c = 0; c < std::uint64_t{t} + n; ++c) {
    if (contains(c) && !other.contains(c)) return false;
  }
  return true;
}

std::string to_string(const CardSet& s) {
  std::string out = "{";
  bool first = true;
  auto item = [&](const std::string& x) {
    if (!first) out += ",";
    out += x;
    first = false;
  };
  for (std::uint64_t c = 0; c < s.threshold(); ++c) {
    if (s.contains(c)) item(std::to_string(c));
  }
  std::string tail;
  for (std::uint32_t i = 0; i < s.period(); ++i) {
    if (s.contains(std::uint64_t{s.threshold()} + i)) {
      if (!tail.empty()) tail += ",";
      tail += std::to_string(s.threshold() + i);
    }
  }
  if (!tail.empty()) {
    item(s.period() == 1 ? tail + ".." : tail + " mod " + std::to_string(s.period()) + "..");
  }
  if (s.has_infinite()) item("inf");
  return out + "}";
}

}  // namespace baqe
