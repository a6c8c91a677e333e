#include "terrace/projections.hpp"

#include "terrace/errors.hpp"

#include <algorithm>
#include <numeric>

namespace terrace {

Rational independent_probability(SubsetIndex x, const MarginalSet& m) {
  m.events().check(x);
  Rational v = 1;
  for (std::size_t i = 0; i < m.size(); ++i) {
    v *= x.contains(i) ? m.prob(i) : Rational(1) - m.prob(i);
  }
  return v;
}

TerraceDistribution independent_epd(const MarginalSet& m) {
  const std::size_t n = m.size();
  if (n > kMaxEvents) throw Error(ErrorCode::TooLarge, "too many events for a dense e.p.d.");
  // Extend one event at a time: cells without event i scale by 1 - p_i, cells with it by p_i.
  std::vector<Rational> v(power_set_size(n));
  v[0] = 1;
  for (std::size_t i = 0; i < n; ++i) {
    const std::size_t half = power_set_size(i);
    const Rational q = Rational(1) - m.prob(i);
    for (std::size_t s = 0; s < half; ++s) {
      v[s + half] = v[s] * m.prob(i);
      v[s] *= q;
    }
  }
  return TerraceDistribution(m.events(), PowerSetMap(n, std::move(v)));
}

PhenomenonMap::PhenomenonMap(std::size_t n, SubsetIndex kept, std::vector<std::size_t> perm)
    : kept_(kept), perm_(std::move(perm)) {
  if (perm_.size() != n || n > kMaxEvents) {
    throw Error(ErrorCode::DimensionMismatch, "permutation length " + std::to_string(perm_.size()) +
                                                  " does not match " + std::to_string(n) + " events");
  }
  std::vector<bool> seen(n, false);
  for (auto p : perm_) {
    if (p >= n || seen[p]) throw Error(ErrorCode::DimensionMismatch, "renumbering is not a permutation");
    seen[p] = true;
  }
  if (kept_.bits >= power_set_size(n)) {
    throw Error(ErrorCode::DimensionMismatch, "kept set is not a subset of the event set");
  }
}

PhenomenonMap PhenomenonMap::keeping(std::size_t n, SubsetIndex kept) {
  std::vector<std::size_t> id(n);
  std::iota(id.begin(), id.end(), std::size_t{0});
  return PhenomenonMap(n, kept, std::move(id));
}

bool PhenomenonMap::is_identity() const {
  if (kept_ != SubsetIndex::full(size())) return false;
  for (std::size_t j = 0; j < perm_.size(); ++j) {
    if (perm_[j] != j) return false;
  }
  return true;
}

SubsetIndex PhenomenonMap::map(SubsetIndex x) const {
  const SubsetIndex z = x ^ complemented();
  SubsetIndex y;
  for (std::size_t j = 0; j < perm_.size(); ++j) {
    if (z.contains(perm_[j])) y.bits |= std::uint32_t{1} << j;
  }
  return y;
}

SubsetIndex PhenomenonMap::unmap(SubsetIndex y) const {
  SubsetIndex z;
  for (std::size_t j = 0; j < perm_.size(); ++j) {
    if (y.contains(j)) z.bits |= std::uint32_t{1} << perm_[j];
  }
  return z ^ complemented();
}

MarginalSet PhenomenonMap::transform(const MarginalSet& m) const {
  if (m.size() != size()) {
    throw Error(ErrorCode::DimensionMismatch, "phenomenon over " + std::to_string(size()) +
                                                  " events applied to " + std::to_string(m.size()));
  }
  std::vector<std::string> labels;
  std::vector<Rational> probs;
  for (auto src : perm_) {
    if (kept_.contains(src)) {
      labels.push_back(m.events().label(src));
      probs.push_back(m.prob(src));
    } else {
      labels.push_back(m.events().label(src) + std::string(kComplementSuffix));
      probs.push_back(Rational(1) - m.prob(src));
    }
  }
  return MarginalSet(EventSet::make(std::move(labels)), std::move(probs));
}

std::pair<HalfRareMarginalSet, PhenomenonMap> half_rare_projection(const MarginalSet& m) {
  const std::size_t n = m.size();
  SubsetIndex complemented;
  std::vector<Rational> folded(n);
  for (std::size_t i = 0; i < n; ++i) {
    if (m.prob(i) > Rational::half()) {
      complemented.bits |= std::uint32_t{1} << i;
      folded[i] = Rational(1) - m.prob(i);
    } else {
      folded[i] = m.prob(i);
    }
  }
  std::vector<std::size_t> perm(n);
  std::iota(perm.begin(), perm.end(), std::size_t{0});
  std::stable_sort(perm.begin(), perm.end(),
                   [&](std::size_t a, std::size_t b) { return folded[a] > folded[b]; });

  PhenomenonMap pm(n, SubsetIndex::full(n) ^ complemented, std::move(perm));
  HalfRareMarginalSet h(pm.transform(m));
  return {std::move(h), std::move(pm)};
}

PowerSetMap apply_phenomenon(const PowerSetMap& d, const PhenomenonMap& pm) {
  if (d.events() != pm.size()) {
    throw Error(ErrorCode::DimensionMismatch, "map over " + std::to_string(d.events()) +
                                                  " events, phenomenon over " + std::to_string(pm.size()));
  }
  PowerSetMap out(d.events());
  for (auto x : subset_iter(d.events())) out[pm.map(x)] = d[x];
  return out;
}

PowerSetMap unapply_phenomenon(const PowerSetMap& d, const PhenomenonMap& pm) {
  if (d.events() != pm.size()) {
    throw Error(ErrorCode::DimensionMismatch, "map over " + std::to_string(d.events()) +
                                                  " events, phenomenon over " + std::to_string(pm.size()));
  }
  PowerSetMap out(d.events());
  for (auto x : subset_iter(d.events())) out[x] = d[pm.map(x)];
  return out;
}

BoundaryDistributions bounds_via_projection(const MarginalSet& m) {
  if (m.size() > kMaxEvents) throw Error(ErrorCode::TooLarge, "too many events for dense bounds");
  const auto [h, pm] = half_rare_projection(m);
  const auto projected = boundary_distributions(h);
  return {m.events(), unapply_phenomenon(projected.lower, pm), unapply_phenomenon(projected.upper, pm)};
}

}  // namespace terrace
