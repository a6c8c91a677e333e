#include "terrace/marginals.hpp"

#include "terrace/errors.hpp"

namespace terrace {

MarginalSet::MarginalSet(EventSet events, std::vector<Rational> probs)
    : events_(std::move(events)), probs_(std::move(probs)) {
  if (probs_.size() != events_.size()) {
    throw Error(ErrorCode::LengthMismatch, std::to_string(events_.size()) + " events but " +
                                               std::to_string(probs_.size()) + " probabilities");
  }
  for (std::size_t i = 0; i < probs_.size(); ++i) {
    if (probs_[i] < 0 || probs_[i] > 1) {
      throw Error(ErrorCode::ProbabilityOutOfRange, "probability of '" + events_.label(i) + "' (index " +
                                                        std::to_string(i) + ") is " + probs_[i].to_fraction() +
                                                        ", outside [0, 1]");
    }
  }
}

MarginalSet MarginalSet::numbered(std::vector<Rational> probs) {
  auto events = EventSet::numbered(probs.size());
  return MarginalSet(std::move(events), std::move(probs));
}

bool is_half_rare(const MarginalSet& m) {
  const auto p = m.probs();
  if (p.empty() || p[0] > Rational::half()) return false;
  for (std::size_t i = 1; i < p.size(); ++i) {
    if (p[i] > p[i - 1]) return false;
  }
  return true;
}

HalfRareMarginalSet::HalfRareMarginalSet(MarginalSet inner) : inner_(std::move(inner)) {
  const auto p = inner_.probs();
  if (p[0] > Rational::half()) {
    throw Error(ErrorCode::NotHalfRare, "p_1 = " + p[0].to_fraction() + " exceeds 1/2");
  }
  for (std::size_t i = 1; i < p.size(); ++i) {
    if (p[i] > p[i - 1]) {
      throw Error(ErrorCode::NotHalfRare, "probabilities are not in descending order at index " +
                                              std::to_string(i) + " (" + p[i - 1].to_fraction() + " < " +
                                              p[i].to_fraction() + ")");
    }
  }
}

}  // namespace terrace
