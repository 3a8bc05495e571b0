#pragma once

#include <cstdint>
#include <optional>
#include <string>
#include <vector>

#include "baqe/minterm.hpp"

namespace baqe {

/// A set of cardinals: an eventually periodic subset of N plus possibly the
/// infinite cardinal. Every descriptor denotes one, and the family is closed
/// under Boolean operations and Minkowski sums, which is what makes the
/// projection of a quantified variable exact.
///
/// Stored as membership bits for [0, T + N): c < T reads bits[c], c >= T
/// reads bits[T + (c - T) % N]. Canonical: minimal N, then minimal T.
class CardSet {
public:
  CardSet();  // empty

  static CardSet empty() { return CardSet(); }
  static CardSet universe();
  static CardSet exactly(std::uint64_t e);
  /// All finite c >= k, plus infinity.
  static CardSet at_least(std::uint64_t k);
  static CardSet finite_at_least(std::uint64_t k);
  static CardSet infinite();
  static CardSet all_finite() { return finite_at_least(0); }
  /// Finite c with allowed[c % allowed.size()].
  static CardSet residues(const std::vector<bool>& allowed);
  /// bits covers [0, threshold + period); the last period entries repeat.
  static CardSet from_bits(std::uint32_t threshold, std::uint32_t period, std::vector<bool> bits, bool infinite);

  bool contains(std::uint64_t c) const;
  bool contains(Cardinal c) const { return c.infinite ? infinite_ : contains(c.value); }
  bool has_infinite() const { return infinite_; }
  bool is_empty() const { return !infinite_ && finite_empty(); }
  bool is_universe() const { return infinite_ && finite_full(); }
  bool finite_empty() const;
  /// Contains every sufficiently large finite c.
  bool finite_cofinite() const;
  bool finite_full() const { return threshold_ == 0 && period_ == 1 && bits_[0]; }
  std::optional<std::uint64_t> min_finite() const;

  std::uint32_t threshold() const { return threshold_; }
  std::uint32_t period() const { return period_; }

  friend CardSet operator&(const CardSet& a, const CardSet& b);
  friend CardSet operator|(const CardSet& a, const CardSet& b);
  CardSet operator~() const;
  friend CardSet operator-(const CardSet& a, const CardSet& b) { return a & ~b; }
  /// Sumset {a + b}, with a + inf = inf.
  friend CardSet sum(const CardSet& a, const CardSet& b);
  bool subset_of(const CardSet& other) const;

  friend bool operator==(const CardSet&, const CardSet&) = default;

private:
  void canonicalize();

  std::uint32_t threshold_ = 0;
  std::uint32_t period_ = 1;
  std::vector<bool> bits_;
  bool infinite_ = false;
};

/// e.g. "{0,2} u 5+3N u {inf}" style rendering for traces and tests.
std::string to_string(const CardSet& s);

}  // namespace baqe
