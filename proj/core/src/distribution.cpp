#include "terrace/distribution.hpp"

#include "terrace/errors.hpp"

namespace terrace {

namespace {

void check_size(std::size_t n) {
  if (n > kMaxEvents) {
    throw Error(ErrorCode::TooLarge, "dense power-set maps are limited to " + std::to_string(kMaxEvents) +
                                         " events, got " + std::to_string(n));
  }
}

}  // namespace

PowerSetMap::PowerSetMap(std::size_t n, const Rational& fill) : n_(n) {
  check_size(n);
  values_.assign(power_set_size(n), fill);
}

PowerSetMap::PowerSetMap(std::size_t n, std::vector<Rational> values) : n_(n), values_(std::move(values)) {
  check_size(n);
  if (values_.size() != power_set_size(n)) {
    throw Error(ErrorCode::DimensionMismatch, "expected " + std::to_string(power_set_size(n)) + " values, got " +
                                                  std::to_string(values_.size()));
  }
}

const Rational& PowerSetMap::at(SubsetIndex x) const {
  if (x.bits >= values_.size()) {
    throw Error(ErrorCode::IndexOutOfRange, "subset index " + std::to_string(x.bits) + " out of range");
  }
  return values_[x.bits];
}

Rational PowerSetMap::sum() const {
  Rational s;
  for (const auto& v : values_) s += v;
  return s;
}

std::vector<Rational> induced_marginals(const PowerSetMap& d) {
  std::vector<Rational> out(d.events());
  for (auto x : subset_iter(d.events())) {
    const auto& v = d[x];
    if (v.is_zero()) continue;
    for (std::size_t i = 0; i < d.events(); ++i) {
      if (x.contains(i)) out[i] += v;
    }
  }
  return out;
}

TerraceDistribution::TerraceDistribution(EventSet events, PowerSetMap values)
    : events_(std::move(events)), values_(std::move(values)) {
  if (values_.events() != events_.size()) {
    throw Error(ErrorCode::DimensionMismatch, "distribution over " + std::to_string(values_.events()) +
                                                  " events paired with a " + std::to_string(events_.size()) +
                                                  "-event set");
  }
  for (auto x : subset_iter(events_.size())) {
    if (values_[x] < 0 || values_[x] > 1) {
      throw Error(ErrorCode::ProbabilityOutOfRange, "p(" + indicator_string(x, events_.size()) + ") = " +
                                                        values_[x].to_fraction() + " is outside [0, 1]");
    }
  }
  if (const auto total = values_.sum(); total != 1) {
    throw Error(ErrorCode::NotNormalized, "terrace probabilities sum to " + total.to_fraction() + ", not 1");
  }
}

bool TerraceDistribution::has_marginals(const MarginalSet& m) const {
  if (m.size() != events_.size()) return false;
  const auto induced = marginals();
  for (std::size_t i = 0; i < induced.size(); ++i) {
    if (induced[i] != m.prob(i)) return false;
  }
  return true;
}

}  // namespace terrace
