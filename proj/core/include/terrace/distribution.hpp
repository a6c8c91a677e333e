#pragma once

#include "terrace/event_set.hpp"
#include "terrace/marginals.hpp"
#include "terrace/rational.hpp"

#include <vector>

namespace terrace {

/// Dense map from every subset of an n-event set to a rational, indexed by SubsetIndex.
class PowerSetMap {
 public:
  PowerSetMap() = default;
  /// Throws TooLarge for n > kMaxEvents.
  explicit PowerSetMap(std::size_t n, const Rational& fill = Rational{});
  /// Throws DimensionMismatch unless values.size() == 2^n.
  PowerSetMap(std::size_t n, std::vector<Rational> values);

  std::size_t events() const { return n_; }
  std::size_t size() const { return values_.size(); }

  const Rational& operator[](SubsetIndex x) const { return values_[x.bits]; }
  Rational& operator[](SubsetIndex x) { return values_[x.bits]; }
  const Rational& at(SubsetIndex x) const;

  const std::vector<Rational>& values() const { return values_; }

  Rational sum() const;

  friend bool operator==(const PowerSetMap&, const PowerSetMap&) = default;

 private:
  std::size_t n_ = 0;
  std::vector<Rational> values_;
};

/// Marginals induced by a power-set map: entry i is the sum over all X containing event i.
std::vector<Rational> induced_marginals(const PowerSetMap& d);

/**
 * An event-probability distribution of the 1st kind: p(X) is the probability
 * that exactly the events of X occur. The constructor checks that every value
 * lies in [0, 1] and that the total is exactly 1.
 */
class TerraceDistribution {
 public:
  /// Throws DimensionMismatch, ProbabilityOutOfRange or NotNormalized.
  TerraceDistribution(EventSet events, PowerSetMap values);

  const EventSet& events() const { return events_; }
  const PowerSetMap& values() const { return values_; }
  const Rational& operator[](SubsetIndex x) const { return values_[x]; }

  std::vector<Rational> marginals() const { return induced_marginals(values_); }
  /// True when the induced marginals equal m's probabilities exactly.
  bool has_marginals(const MarginalSet& m) const;

  friend bool operator==(const TerraceDistribution&, const TerraceDistribution&) = default;

 private:
  EventSet events_;
  PowerSetMap values_;
};

/// Joint distributions over the 2^N terrace cells share the e.p.d. wire format.
using JointDistribution = TerraceDistribution;

}  // namespace terrace
