#pragma once

#include "terrace/event_set.hpp"
#include "terrace/rational.hpp"

#include <span>
#include <vector>

namespace terrace {

/// Per-event probabilities p_x, one per event of an EventSet, each in [0, 1].
class MarginalSet {
 public:
  /// Throws LengthMismatch or ProbabilityOutOfRange.
  MarginalSet(EventSet events, std::vector<Rational> probs);

  /// Events auto-named x1..xN.
  static MarginalSet numbered(std::vector<Rational> probs);

  const EventSet& events() const { return events_; }
  std::size_t size() const { return probs_.size(); }
  std::span<const Rational> probs() const { return probs_; }
  const Rational& prob(std::size_t i) const { return probs_.at(i); }

  friend bool operator==(const MarginalSet&, const MarginalSet&) = default;

 private:
  EventSet events_;
  std::vector<Rational> probs_;
};

inline MarginalSet validate_marginals(EventSet events, std::vector<Rational> probs) {
  return MarginalSet(std::move(events), std::move(probs));
}

/// 1/2 >= p_1 >= p_2 >= ... >= p_N in stored order.
bool is_half_rare(const MarginalSet& m);

/**
 * A marginal set in half-rare form: every probability at most 1/2 and the
 * events stored in non-increasing order of probability, so the most probable
 * event is always the first one.
 */
class HalfRareMarginalSet {
 public:
  /// Throws NotHalfRare naming the first violating position.
  explicit HalfRareMarginalSet(MarginalSet inner);

  const MarginalSet& marginals() const { return inner_; }
  const EventSet& events() const { return inner_.events(); }
  std::size_t size() const { return inner_.size(); }
  std::span<const Rational> probs() const { return inner_.probs(); }
  const Rational& prob(std::size_t i) const { return inner_.prob(i); }

  const Rational& p_max() const { return inner_.prob(0); }
  static constexpr std::size_t x_max() { return 0; }

  friend bool operator==(const HalfRareMarginalSet&, const HalfRareMarginalSet&) = default;

 private:
  MarginalSet inner_;
};

}  // namespace terrace
