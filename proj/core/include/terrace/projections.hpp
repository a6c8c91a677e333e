#pragma once

#include "terrace/distribution.hpp"
#include "terrace/event_set.hpp"
#include "terrace/frechet.hpp"
#include "terrace/marginals.hpp"

#include <string>
#include <utility>
#include <vector>

namespace terrace {

/// p*(X) = prod_{x in X} p_x * prod_{x not in X} (1 - p_x).
Rational independent_probability(SubsetIndex x, const MarginalSet& m);

/// The independent e.p.d. of the 1st kind over all 2^N subsets.
TerraceDistribution independent_epd(const MarginalSet& m);

/**
 * A set-phenomenon transform. Events outside `kept` are complemented, then the
 * events are renumbered by `perm`: event j of the transformed set is event
 * perm[j] of the original. A subset X of the original maps to perm(X ^ C),
 * where C is the complemented set.
 */
class PhenomenonMap {
 public:
  /// Throws DimensionMismatch unless perm is a permutation of 0..n-1 and kept is a subset.
  PhenomenonMap(std::size_t n, SubsetIndex kept, std::vector<std::size_t> perm);

  /// The M-phenomenon with identity renumbering.
  static PhenomenonMap keeping(std::size_t n, SubsetIndex kept);

  std::size_t size() const { return perm_.size(); }
  SubsetIndex kept() const { return kept_; }
  SubsetIndex complemented() const { return SubsetIndex::full(size()) ^ kept_; }
  const std::vector<std::size_t>& perm() const { return perm_; }
  bool is_identity() const;

  /// perm(X ^ C).
  SubsetIndex map(SubsetIndex x) const;
  /// Inverse of map.
  SubsetIndex unmap(SubsetIndex y) const;

  /// Marginals of the transformed event set; complemented labels gain a "^c" suffix.
  MarginalSet transform(const MarginalSet& m) const;

  friend bool operator==(const PhenomenonMap&, const PhenomenonMap&) = default;

 private:
  SubsetIndex kept_;
  std::vector<std::size_t> perm_;
};

/// Suffix marking a complemented event label.
inline constexpr std::string_view kComplementSuffix = "^c";

/**
 * Complements every event with p_x > 1/2 and stably sorts the result into
 * descending order, yielding a half-rare set plus the map that produced it.
 */
std::pair<HalfRareMarginalSet, PhenomenonMap> half_rare_projection(const MarginalSet& m);

/// out[pm.map(X)] = d[X] for every X.
PowerSetMap apply_phenomenon(const PowerSetMap& d, const PhenomenonMap& pm);
/// out[X] = d[pm.map(X)]; inverse of apply_phenomenon.
PowerSetMap unapply_phenomenon(const PowerSetMap& d, const PhenomenonMap& pm);

/// Bounds computed on the half-rare projection and renumbered back onto m's events.
BoundaryDistributions bounds_via_projection(const MarginalSet& m);

}  // namespace terrace
