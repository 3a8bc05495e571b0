#pragma once

#include <cstdint>
#include <optional>
#include <random>
#include <stdexcept>
#include <string>
#include <vector>

#include "baqe/epset.hpp"
#include "baqe/formula.hpp"

namespace baqe {

/// Evaluation hit a free variable the assignment does not bind.
class MissingVariable : public std::invalid_argument {
public:
  explicit MissingVariable(const std::string& name)
      : std::invalid_argument("no value assigned to variable '" + name + "'"), name_(name) {}
  const std::string& name() const { return name_; }

private:
  std::string name_;
};

EPSet eval_term(const Term& t, const Assignment& sigma);
bool eval_atom(const Atom& a, const Assignment& sigma);
/// Throws std::invalid_argument on quantifiers, MissingVariable on unbound variables.
bool eval_qf(const Formula& f, const Assignment& sigma);

enum class Truth : std::uint8_t { False, True, Unknown };
std::string to_string(Truth t);
inline Truth truth_of(bool b) { return b ? Truth::True : Truth::False; }

enum class SamplingMode : std::uint8_t {
  All,             // every EPSet within the bounds
  FiniteCofinite,  // only finite and cofinite sets (R empty or full)
};

struct SearchBounds {
  std::uint32_t max_transient = 8;  // thresholds T <= max_transient
  std::uint32_t max_period = 6;     // periods 1 <= p <= max_period
  SamplingMode mode = SamplingMode::All;
};

/// Canonical EPSets within the bounds, ordered by T, then p, then the
/// transient set, then R (sets compared lexicographically as sorted lists).
const std::vector<EPSet>& candidates(const SearchBounds& bounds);

/// Kleene evaluation with quantifiers read over candidates(bounds). An
/// existential is True when a witness is found and Unknown otherwise; a
/// universal is False when a counterexample is found and Unknown otherwise.
/// A definite answer is therefore the true answer in the full model.
Truth eval_bounded(const Formula& f, const Assignment& sigma, const SearchBounds& bounds);

/// f is E x p. Returns the first candidate w with p true under sigma[x := w]
/// (nested quantifiers in p are searched the same way), or nullopt.
std::optional<EPSet> witness_search(const Formula& f, const Assignment& sigma, const SearchBounds& bounds);

/// Deterministic sampler: finite, cofinite and infinite-coinfinite sets with
/// probability 1/3 each (the last needs max_period >= 2; otherwise only the
/// first two kinds occur, 1/2 each). Thresholds, periods, transient members
/// and residues are drawn uniformly within the bounds. In FiniteCofinite mode
/// only the first two kinds are drawn.
class EPSampler {
public:
  explicit EPSampler(std::uint64_t seed) : rng_(seed) {}

  EPSet next(const SearchBounds& bounds);
  Assignment assignment(const std::vector<std::string>& vars, const SearchBounds& bounds);
  /// Uniform in [0, n), identical on every platform.
  std::uint64_t below(std::uint64_t n);

private:
  std::mt19937_64 rng_;
};

EPSet random_ep(std::uint64_t seed, const SearchBounds& bounds);

}  // namespace baqe
