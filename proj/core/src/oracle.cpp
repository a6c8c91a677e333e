#include "terrace/oracle.hpp"

#include "terrace/errors.hpp"
#include "terrace/frechet.hpp"
#include "terrace/simplex.hpp"

#include <algorithm>
#include <functional>
#include <random>
#include <thread>

namespace terrace {

Extremum lp_extremize_terrace(SubsetIndex x, const MarginalSet& m, Direction direction) {
  const std::size_t n = m.size();
  if (n > kMaxOracleEvents) {
    throw Error(ErrorCode::TooLarge, "LP oracle supports at most " + std::to_string(kMaxOracleEvents) +
                                         " events, got " + std::to_string(n));
  }
  m.events().check(x);

  lp::Problem p;
  p.rows = n + 1;
  p.cols = power_set_size(n);
  p.a.assign(p.rows * p.cols, Rational{});
  p.b.assign(p.rows, Rational{});
  p.c.assign(p.cols, Rational{});

  for (auto s : subset_iter(n)) {
    p.at(0, s.bits) = 1;
    for (std::size_t i = 0; i < n; ++i) {
      if (s.contains(i)) p.at(i + 1, s.bits) = 1;
    }
  }
  p.b[0] = 1;
  for (std::size_t i = 0; i < n; ++i) p.b[i + 1] = m.prob(i);
  p.c[x.bits] = direction == Direction::Max ? 1 : -1;

  auto sol = lp::maximize(p);
  if (sol.status != lp::Status::Optimal) {
    throw Error(ErrorCode::Infeasible, "LP over joints with marginals was not solved to optimality");
  }
  Rational value = direction == Direction::Max ? sol.value : -sol.value;
  return {std::move(value), JointDistribution(m.events(), PowerSetMap(n, std::move(sol.x)))};
}

const SubsetVerification* VerificationReport::first_mismatch() const {
  for (const auto& r : records) {
    if (!r.lower_matches() || !r.upper_matches()) return &r;
  }
  return nullptr;
}

VerificationReport verify_bounds(const MarginalSet& m, unsigned workers) {
  const std::size_t n = m.size();
  if (n > kMaxOracleEvents) {
    throw Error(ErrorCode::TooLarge, "verification supports at most " + std::to_string(kMaxOracleEvents) +
                                         " events, got " + std::to_string(n));
  }
  const auto bounds = boundary_distributions(m);
  const std::size_t cells = power_set_size(n);

  std::vector<std::optional<SubsetVerification>> slots(cells);
  auto work = [&](std::size_t begin, std::size_t stride) {
    for (std::size_t k = begin; k < cells; k += stride) {
      const SubsetIndex x{static_cast<std::uint32_t>(k)};
      auto lo = lp_extremize_terrace(x, m, Direction::Min);
      auto hi = lp_extremize_terrace(x, m, Direction::Max);
      slots[k].emplace(SubsetVerification{x, bounds.lower[x], std::move(lo.value), bounds.upper[x],
                                          std::move(hi.value), std::move(lo.witness), std::move(hi.witness)});
    }
  };

  workers = std::clamp<unsigned>(workers, 1, static_cast<unsigned>(cells));
  if (workers == 1) {
    work(0, 1);
  } else {
    std::vector<std::jthread> pool;
    for (unsigned w = 0; w < workers; ++w) pool.emplace_back(work, w, workers);
  }

  VerificationReport report{m, {}, true};
  report.records.reserve(cells);
  for (auto& s : slots) report.records.push_back(std::move(*s));
  report.pass = report.first_mismatch() == nullptr;
  return report;
}

MarginalSet random_marginals(std::size_t n, std::uint64_t seed, bool half_rare) {
  if (n == 0) throw Error(ErrorCode::EmptySet, "random marginals need at least one event");
  if (n > kMaxEvents) throw Error(ErrorCode::TooLarge, "at most " + std::to_string(kMaxEvents) + " events");

  // Raw engine output only: std distributions are not reproducible across standard libraries.
  std::mt19937_64 engine(seed);
  std::vector<Rational> probs;
  probs.reserve(n);
  for (std::size_t i = 0; i < n; ++i) {
    const auto den = static_cast<std::int64_t>(engine() % 1000) + 1;
    const auto num = static_cast<std::int64_t>(engine() % static_cast<std::uint64_t>(den + 1));
    probs.emplace_back(num, den);
  }
  if (half_rare) {
    for (auto& p : probs) p = min(p, Rational::half());
    std::sort(probs.begin(), probs.end(), std::greater<>());
  }
  return MarginalSet::numbered(std::move(probs));
}

}  // namespace terrace
