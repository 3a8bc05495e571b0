#pragma once

#include <cstdint>
#include <map>
#include <optional>
#include <string>
#include <string_view>
#include <vector>

#include "baqe/minterm.hpp"

namespace baqe {

/// An eventually periodic subset of N:
///   transient  U  { n >= T : n mod p in R }
/// with transient a subset of [0, T) and R a subset of [0, p).
///
/// Always canonical: minimal p, then minimal T. So two EPSets are equal iff
/// they denote the same set.
class EPSet {
public:
  EPSet() = default;  // empty set

  /// Throws std::invalid_argument unless p >= 1, transient < T, R < p.
  static EPSet make(std::vector<std::uint64_t> transient, std::uint64_t threshold, std::uint64_t period,
                    std::vector<std::uint64_t> residues);
  static EPSet finite(std::vector<std::uint64_t> elements);
  static EPSet full() { return make({}, 0, 1, {0}); }
  /// Residue class r + pN.
  static EPSet progression(std::uint64_t r, std::uint64_t p);

  const std::vector<std::uint64_t>& transient() const { return transient_; }
  std::uint64_t threshold() const { return threshold_; }
  std::uint64_t period() const { return period_; }
  const std::vector<std::uint64_t>& residues() const { return residues_; }

  bool contains(std::uint64_t n) const;
  bool is_finite() const { return residues_.empty(); }
  bool is_cofinite() const { return residues_.size() == period_; }

  EPSet complement() const;
  friend EPSet set_union(const EPSet& a, const EPSet& b);
  friend EPSet set_intersection(const EPSet& a, const EPSet& b);
  /// Symmetric difference: the ring sum.
  friend EPSet ring_sum(const EPSet& a, const EPSet& b);
  /// Intersection: the ring product.
  friend EPSet ring_product(const EPSet& a, const EPSet& b) { return set_intersection(a, b); }

  friend bool operator==(const EPSet&, const EPSet&) = default;

private:
  void canonicalize();

  std::vector<std::uint64_t> transient_;
  std::uint64_t threshold_ = 0;
  std::uint64_t period_ = 1;
  std::vector<std::uint64_t> residues_;
};

/// Pointwise comparison, independent of canonical forms.
bool same_denotation(const EPSet& a, const EPSet& b);

Cardinal card(const EPSet& a);
/// card mod n, or nullopt (undefined) for infinite sets.
std::optional<std::uint64_t> residue(const EPSet& a, std::uint64_t n);

/// "EP{transient=[0,1]; T=2; p=1; R=[]}"
std::string to_string(const EPSet& a);
/// Accepts the to_string format with arbitrary spacing; the result is
/// canonicalized. Throws std::invalid_argument.
EPSet parse_epset(std::string_view text);

using Assignment = std::map<std::string, EPSet>;

/// Bindings "var = EP{...}", separated by newlines, ',' or ';'. Comments run
/// from '#' to the end of the line. Throws std::invalid_argument.
Assignment parse_assignment(std::string_view text);
std::string to_string(const Assignment& a);

}  // namespace baqe
