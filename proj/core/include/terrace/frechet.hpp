#pragma once

#include "terrace/distribution.hpp"
#include "terrace/event_set.hpp"
#include "terrace/marginals.hpp"
#include "terrace/rational.hpp"

namespace terrace {

/// Lower and upper Frechet-boundary distributions of the 1st kind.
struct BoundaryDistributions {
  EventSet events;
  PowerSetMap lower;
  PowerSetMap upper;

  friend bool operator==(const BoundaryDistributions&, const BoundaryDistributions&) = default;
};

/// Per-subset covariance intervals [lower(X), upper(X)] for a doublet.
struct CovarianceBounds {
  EventSet events;
  PowerSetMap lower;
  PowerSetMap upper;

  friend bool operator==(const CovarianceBounds&, const CovarianceBounds&) = default;
};

/// max{0, 1 - sum_{x in X}(1 - p_x) - sum_{x not in X} p_x}.
Rational lower_bound_general(SubsetIndex x, const MarginalSet& m);

/// min{min_{x in X} p_x, min_{x not in X}(1 - p_x)}; an empty side drops out.
Rational upper_bound_general(SubsetIndex x, const MarginalSet& m);

/// 1 - p_1 for the empty set, min_{z in X} p_z otherwise.
Rational upper_bound_half_rare(SubsetIndex x, const HalfRareMarginalSet& h);

/**
 * Lower bound for a half-rare set. Only two subsets can have a nonzero value:
 * the empty set, with max{0, 1 - sum p}, and the singleton of the most probable
 * event x_1, with max{0, p_1 - sum of the rest}. Every other subset gets 0.
 */
Rational lower_bound_half_rare(SubsetIndex x, const HalfRareMarginalSet& h);

enum class BoundPath {
  Auto,      ///< half-rare formulas when the marginals qualify, general ones otherwise
  General,   ///< always the general formulas
  HalfRare,  ///< half-rare formulas; throws NotHalfRare if the marginals do not qualify
};

/// Dense lower/upper maps over all 2^N subsets.
BoundaryDistributions boundary_distributions(const MarginalSet& m, BoundPath path = BoundPath::Auto);
BoundaryDistributions boundary_distributions(const HalfRareMarginalSet& h);

/// Doublet {x, y} with 1/2 >= p_x >= p_y >= 0; entries in the order {}, {x}, {y}, {x,y}.
BoundaryDistributions doublet_bounds(const Rational& px, const Rational& py);

/// Kov(X) = p(X) - p*(X), the deviation of d from the independent e.p.d. at X.
/// Throws MarginalMismatch unless d induces exactly the marginals m.
Rational covariance_first_kind(const TerraceDistribution& d, const MarginalSet& m, SubsetIndex x);

/// Covariance intervals of a half-rare doublet, same layout as doublet_bounds.
CovarianceBounds covariance_bounds_doublet(const Rational& px, const Rational& py);

}  // namespace terrace
