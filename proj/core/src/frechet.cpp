#include "terrace/frechet.hpp"

#include "terrace/errors.hpp"
#include "terrace/projections.hpp"

#include <optional>

namespace terrace {

Rational lower_bound_general(SubsetIndex x, const MarginalSet& m) {
  m.events().check(x);
  Rational s = 1;
  for (std::size_t i = 0; i < m.size(); ++i) {
    s -= x.contains(i) ? Rational(1) - m.prob(i) : m.prob(i);
  }
  return max(Rational{}, s);
}

Rational upper_bound_general(SubsetIndex x, const MarginalSet& m) {
  m.events().check(x);
  std::optional<Rational> best;
  for (std::size_t i = 0; i < m.size(); ++i) {
    Rational v = x.contains(i) ? m.prob(i) : Rational(1) - m.prob(i);
    if (!best || v < *best) best = std::move(v);
  }
  return *best;
}

Rational upper_bound_half_rare(SubsetIndex x, const HalfRareMarginalSet& h) {
  h.events().check(x);
  if (x.is_empty()) return Rational(1) - h.p_max();
  // Descending order: the minimum over X sits at X's highest event index.
  const auto last = static_cast<std::size_t>(31 - std::countl_zero(x.bits));
  return h.prob(last);
}

Rational lower_bound_half_rare(SubsetIndex x, const HalfRareMarginalSet& h) {
  h.events().check(x);
  if (x.is_empty()) {
    Rational s = 1;
    for (const auto& p : h.probs()) s -= p;
    return max(Rational{}, s);
  }
  if (x == SubsetIndex::singleton(HalfRareMarginalSet::x_max())) {
    Rational s = h.p_max();
    for (std::size_t i = 1; i < h.size(); ++i) s -= h.prob(i);
    return max(Rational{}, s);
  }
  return Rational{};
}

namespace {

// Both general formulas are affine/min-folds over the members of X, so each
// subset extends X \ {lowest bit} by one event: O(2^N) rational operations.
BoundaryDistributions dense_general(const MarginalSet& m) {
  const std::size_t n = m.size();
  PowerSetMap lower(n);
  PowerSetMap upper(n);

  // 1 - sum_{X}(1-p) - sum_{not X} p = (1 - sum p) - sum_{x in X} (1 - 2 p_x)
  Rational base = 1;
  std::vector<Rational> shift(n);
  for (std::size_t i = 0; i < n; ++i) {
    base -= m.prob(i);
    shift[i] = Rational(1) - 2 * m.prob(i);
  }

  // Running minima over X (p_x) and over its complement (1 - p_x); 2 stands for "empty".
  const Rational none = 2;
  PowerSetMap raw(n);
  PowerSetMap min_in(n, none);
  PowerSetMap min_out(n, none);
  const auto full = SubsetIndex::full(n);

  raw[SubsetIndex::empty()] = base;
  for (std::uint32_t bits = 1; bits < power_set_size(n); ++bits) {
    const SubsetIndex x{bits};
    const auto low = static_cast<std::size_t>(std::countr_zero(bits));
    const SubsetIndex rest{bits & (bits - 1)};
    raw[x] = raw[rest] - shift[low];
    min_in[x] = min(min_in[rest], m.prob(low));
  }
  // Complement minima: walk subsets of the complement instead.
  for (std::uint32_t bits = 1; bits < power_set_size(n); ++bits) {
    const SubsetIndex c{bits};
    const auto low = static_cast<std::size_t>(std::countr_zero(bits));
    const SubsetIndex rest{bits & (bits - 1)};
    min_out[full ^ c] = min(min_out[full ^ rest], Rational(1) - m.prob(low));
  }
  for (auto x : subset_iter(n)) {
    lower[x] = max(Rational{}, raw[x]);
    upper[x] = min(min_in[x], min_out[x]);
  }
  return {m.events(), std::move(lower), std::move(upper)};
}

BoundaryDistributions dense_half_rare(const HalfRareMarginalSet& h) {
  const std::size_t n = h.size();
  PowerSetMap lower(n);
  PowerSetMap upper(n);
  lower[SubsetIndex::empty()] = lower_bound_half_rare(SubsetIndex::empty(), h);
  lower[SubsetIndex::singleton(0)] = lower_bound_half_rare(SubsetIndex::singleton(0), h);
  upper[SubsetIndex::empty()] = Rational(1) - h.p_max();
  for (std::uint32_t bits = 1; bits < power_set_size(n); ++bits) {
    const auto last = static_cast<std::size_t>(31 - std::countl_zero(bits));
    upper[SubsetIndex{bits}] = h.prob(last);
  }
  return {h.events(), std::move(lower), std::move(upper)};
}

void check_doublet(const Rational& px, const Rational& py) {
  if (px > Rational::half() || px < py) {
    throw Error(ErrorCode::NotHalfRare, "doublet requires 1/2 >= p_x >= p_y, got p_x = " + px.to_fraction() +
                                            ", p_y = " + py.to_fraction());
  }
  if (py < 0) {
    throw Error(ErrorCode::ProbabilityOutOfRange, "p_y = " + py.to_fraction() + " is negative");
  }
}

EventSet doublet_events() { return EventSet::make({"x", "y"}); }

}  // namespace

BoundaryDistributions boundary_distributions(const MarginalSet& m, BoundPath path) {
  if (m.size() > kMaxEvents) throw Error(ErrorCode::TooLarge, "too many events for dense bounds");
  switch (path) {
    case BoundPath::General:
      return dense_general(m);
    case BoundPath::HalfRare:
      return dense_half_rare(HalfRareMarginalSet(m));
    case BoundPath::Auto:
      break;
  }
  if (is_half_rare(m)) return dense_half_rare(HalfRareMarginalSet(m));
  return dense_general(m);
}

BoundaryDistributions boundary_distributions(const HalfRareMarginalSet& h) { return dense_half_rare(h); }

BoundaryDistributions doublet_bounds(const Rational& px, const Rational& py) {
  check_doublet(px, py);
  const Rational one = 1;
  return {doublet_events(),
          PowerSetMap(2, {one - px - py, px - py, Rational{}, Rational{}}),
          PowerSetMap(2, {one - px, px, py, py})};
}

Rational covariance_first_kind(const TerraceDistribution& d, const MarginalSet& m, SubsetIndex x) {
  if (!d.has_marginals(m)) {
    throw Error(ErrorCode::MarginalMismatch, "distribution does not induce the given marginals");
  }
  m.events().check(x);
  return d[x] - independent_probability(x, m);
}

CovarianceBounds covariance_bounds_doublet(const Rational& px, const Rational& py) {
  check_doublet(px, py);
  const Rational qx = Rational(1) - px;
  const Rational a = px * py;  // p_x p_y
  const Rational b = qx * py;  // (1 - p_x) p_y
  return {doublet_events(),
          PowerSetMap(2, {-a, -b, -b, -a}),
          PowerSetMap(2, {b, a, a, b})};
}

}  // namespace terrace
