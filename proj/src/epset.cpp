#include "baqe/epset.hpp"

#include <algorithm>
#include <cctype>
#include <numeric>
#include <stdexcept>

namespace baqe {

namespace {

bool has(const std::vector<std::uint64_t>& sorted, std::uint64_t x) {
  return std::binary_search(sorted.begin(), sorted.end(), x);
}

void sort_unique(std::vector<std::uint64_t>& v) {
  std::sort(v.begin(), v.end());
  v.erase(std::unique(v.begin(), v.end()), v.end());
}

}  // namespace

EPSet EPSet::make(std::vector<std::uint64_t> transient, std::uint64_t threshold, std::uint64_t period,
                  std::vector<std::uint64_t> residues) {
  if (period == 0) throw std::invalid_argument("EPSet: period must be at least 1");
  sort_unique(transient);
  sort_unique(residues);
  if (!transient.empty() && transient.back() >= threshold) {
    throw std::invalid_argument("EPSet: transient element not below the threshold");
  }
  if (!residues.empty() && residues.back() >= period) {
    throw std::invalid_argument("EPSet: residue not below the period");
  }
  EPSet s;
  s.transient_ = std::move(transient);
  s.threshold_ = threshold;
  s.period_ = period;
  s.residues_ = std::move(residues);
  s.canonicalize();
  return s;
}

EPSet EPSet::finite(std::vector<std::uint64_t> elements) {
  sort_unique(elements);
  const std::uint64_t t = elements.empty() ? 0 : elements.back() + 1;
  return make(std::move(elements), t, 1, {});
}

EPSet EPSet::progression(std::uint64_t r, std::uint64_t p) {
  if (p == 0) throw std::invalid_argument("EPSet: period must be at least 1");
  // Starting the periodic part at r excludes the smaller members of the class.
  return make({}, r, p, {r % p});
}

bool EPSet::contains(std::uint64_t n) const {
  if (n < threshold_) return has(transient_, n);
  return has(residues_, n % period_);
}

void EPSet::canonicalize() {
  // Smallest divisor d of p such that R is invariant under shifting by d.
  std::uint64_t d = period_;
  for (std::uint64_t c = 1; c < period_; ++c) {
    if (period_ % c != 0) continue;
    bool invariant = true;
    for (auto r : residues_) invariant = invariant && has(residues_, (r + c) % period_);
    if (invariant) {
      d = c;
      break;
    }
  }
  std::vector<std::uint64_t> reduced;
  for (auto r : residues_) {
    if (r < d) reduced.push_back(r);
  }
  residues_ = std::move(reduced);
  period_ = d;
  // Lower the threshold while the element just below it already follows the
  // periodic rule.
  while (threshold_ > 0) {
    const std::uint64_t n = threshold_ - 1;
    if (has(transient_, n) != has(residues_, n % period_)) break;
    if (!transient_.empty() && transient_.back() == n) transient_.pop_back();
    --threshold_;
  }
}

namespace {

template <class Op>
EPSet combine(const EPSet& a, const EPSet& b, Op op) {
  const std::uint64_t t = std::max(a.threshold(), b.threshold());
  const std::uint64_t p = std::lcm(a.period(), b.period());
  std::vector<std::uint64_t> transient;
  for (std::uint64_t n = 0; n < t; ++n) {
    if (op(a.contains(n), b.contains(n))) transient.push_back(n);
  }
  // For n >= t, membership in each operand depends on n mod p only.
  std::vector<std::uint64_t> residues;
  for (std::uint64_t r = 0; r < p; ++r) {
    const bool in_a = has(a.residues(), r % a.period());
    const bool in_b = has(b.residues(), r % b.period());
    if (op(in_a, in_b)) residues.push_back(r);
  }
  return EPSet::make(std::move(transient), t, p, std::move(residues));
}

}  // namespace

EPSet EPSet::complement() const {
  std::vector<std::uint64_t> transient;
  for (std::uint64_t n = 0; n < threshold_; ++n) {
    if (!has(transient_, n)) transient.push_back(n);
  }
  std::vector<std::uint64_t> residues;
  for (std::uint64_t r = 0; r < period_; ++r) {
    if (!has(residues_, r)) residues.push_back(r);
  }
  return make(std::move(transient), threshold_, period_, std::move(residues));
}

EPSet set_union(const EPSet& a, const EPSet& b) {
  return combine(a, b, [](bool x, bool y) { return x || y; });
}

EPSet set_intersection(const EPSet& a, const EPSet& b) {
  return combine(a, b, [](bool x, bool y) { return x && y; });
}

EPSet ring_sum(const EPSet& a, const EPSet& b) {
  return combine(a, b, [](bool x, bool y) { return x != y; });
}

// Beyond M = max(T1, T2) both sets are periodic with period L = lcm(p1, p2),
// so membership of any n >= M equals membership of M + (n - M) mod L. A
// disagreement anywhere therefore shows up below M + L.
bool same_denotation(const EPSet& a, const EPSet& b) {
  const std::uint64_t bound = std::max(a.threshold(), b.threshold()) + std::lcm(a.period(), b.period());
  for (std::uint64_t n = 0; n < bound; ++n) {
    if (a.contains(n) != b.contains(n)) return false;
  }
  return true;
}

Cardinal card(const EPSet& a) {
  if (!a.is_finite()) return Cardinal::omega();
  return Cardinal::finite(a.transient().size());
}

std::optional<std::uint64_t> residue(const EPSet& a, std::uint64_t n) {
  if (!a.is_finite() || n == 0) return std::nullopt;
  return a.transient().size() % n;
}

namespace {

std::string list(const std::vector<std::uint64_t>& v) {
  std::string out = "[";
  for (std::size_t i = 0; i < v.size(); ++i) {
    if (i) out += ",";
    out += std::to_string(v[i]);
  }
  return out + "]";
}

class Cursor {
public:
  explicit Cursor(std::string_view s) : s_(s) {}

  void skip_space() {
    while (i_ < s_.size()) {
      if (std::isspace(static_cast<unsigned char>(s_[i_]))) {
        ++i_;
      } else if (s_[i_] == '#') {
        while (i_ < s_.size() && s_[i_] != '\n') ++i_;
      } else {
        break;
      }
    }
  }
  bool done() {
    skip_space();
    return i_ >= s_.size();
  }
  bool accept(char c) {
    skip_space();
    if (i_ < s_.size() && s_[i_] == c) {
      ++i_;
      return true;
    }
    return false;
  }
  void expect(char c) {
    if (!accept(c)) fail(std::string("expected '") + c + "'");
  }
  void keyword(std::string_view w) {
    skip_space();
    if (s_.substr(i_, w.size()) != w) fail("expected '" + std::string(w) + "'");
    i_ += w.size();
  }
  std::uint64_t number() {
    skip_space();
    if (i_ >= s_.size() || !std::isdigit(static_cast<unsigned char>(s_[i_]))) fail("expected a number");
    std::uint64_t v = 0;
    while (i_ < s_.size() && std::isdigit(static_cast<unsigned char>(s_[i_]))) {
      if (v > (UINT64_MAX - 9) / 10) fail("number out of range");
      v = v * 10 + static_cast<std::uint64_t>(s_[i_++] - '0');
    }
    return v;
  }
  std::string identifier() {
    skip_space();
    const std::size_t start = i_;
    while (i_ < s_.size() && (std::isalnum(static_cast<unsigned char>(s_[i_])) || s_[i_] == '_')) ++i_;
    if (start == i_ || std::isdigit(static_cast<unsigned char>(s_[start]))) fail("expected a variable name");
    return std::string(s_.substr(start, i_ - start));
  }
  std::vector<std::uint64_t> number_list() {
    expect('[');
    std::vector<std::uint64_t> out;
    if (accept(']')) return out;
    do {
      out.push_back(number());
    } while (accept(','));
    expect(']');
    return out;
  }
  EPSet epset() {
    keyword("EP");
    expect('{');
    keyword("transient");
    expect('=');
    auto transient = number_list();
    expect(';');
    keyword("T");
    expect('=');
    const auto t = number();
    expect(';');
    keyword("p");
    expect('=');
    const auto p = number();
    expect(';');
    keyword("R");
    expect('=');
    auto r = number_list();
    expect('}');
    return EPSet::make(std::move(transient), t, p, std::move(r));
  }
  [[noreturn]] void fail(const std::string& msg) const {
    throw std::invalid_argument("EP syntax at offset " + std::to_string(i_) + ": " + msg);
  }

private:
  std::string_view s_;
  std::size_t i_ = 0;
};

}  // namespace

std::string to_string(const EPSet& a) {
  return "EP{transient=" + list(a.transient()) + "; T=" + std::to_string(a.threshold()) +
         "; p=" + std::to_string(a.period()) + "; R=" + list(a.residues()) + "}";
}

EPSet parse_epset(std::string_view text) {
  Cursor c(text);
  EPSet s = c.epset();
  if (!c.done()) c.fail("trailing input");
  return s;
}

Assignment parse_assignment(std::string_view text) {
  Cursor c(text);
  Assignment out;
  while (true) {
    while (c.accept(';') || c.accept(',')) {
    }
    if (c.done()) break;
    std::string var = c.identifier();
    c.expect('=');
    EPSet value = c.epset();
    if (!out.emplace(var, std::move(value)).second) c.fail("variable '" + var + "' bound twice");
  }
  return out;
}

std::string to_string(const Assignment& a) {
  std::string out;
  for (const auto& [var, value] : a) out += var + " = " + to_string(value) + "\n";
  return out;
}

}  // namespace baqe
