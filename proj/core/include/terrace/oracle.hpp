#pragma once

#include "terrace/distribution.hpp"
#include "terrace/event_set.hpp"
#include "terrace/marginals.hpp"
#include "terrace/rational.hpp"

#include <cstdint>
#include <optional>
#include <vector>

namespace terrace {

/// Largest event count accepted by the LP oracle (2^6 = 64 atoms).
inline constexpr std::size_t kMaxOracleEvents = 6;

enum class Direction { Min, Max };

struct Extremum {
  Rational value;
  JointDistribution witness;
};

/**
 * Exact optimum of p(X) over every joint distribution of the terrace cells
 * whose induced marginals equal m: 2^N nonnegative atoms, one normalization
 * row and one marginal row per event. The witness is a vertex of that polytope
 * attaining the optimum. Throws TooLarge for N > 6 and Infeasible if the
 * solver ever reports an empty polytope (valid marginals always admit the
 * independent joint, so that would be a solver bug).
 */
Extremum lp_extremize_terrace(SubsetIndex x, const MarginalSet& m, Direction direction);

struct SubsetVerification {
  SubsetIndex subset;
  Rational closed_form_lower;
  Rational lp_min;
  Rational closed_form_upper;
  Rational lp_max;
  JointDistribution witness_min;
  JointDistribution witness_max;

  bool lower_matches() const { return closed_form_lower == lp_min; }
  bool upper_matches() const { return closed_form_upper == lp_max; }
};

struct VerificationReport {
  MarginalSet marginals;
  std::vector<SubsetVerification> records;  // ascending subset order
  bool pass = false;

  /// First record whose closed form differs from the LP optimum.
  const SubsetVerification* first_mismatch() const;
};

/// Runs both LP directions for every subset and compares with boundary_distributions(m).
/// Subsets are split across `workers` threads; the report order does not depend on it.
VerificationReport verify_bounds(const MarginalSet& m, unsigned workers = 1);

/**
 * Deterministic random marginals for N events named x1..xN. Each probability
 * is num/den with den drawn from 1..1000. With half_rare set, values are
 * clamped to [0, 1/2] and sorted descending.
 */
MarginalSet random_marginals(std::size_t n, std::uint64_t seed, bool half_rare);

}  // namespace terrace
