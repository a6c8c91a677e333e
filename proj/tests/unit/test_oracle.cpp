#include <terrace/errors.hpp>
#include <terrace/frechet.hpp>
#include <terrace/oracle.hpp>

#include "support/brute_force.hpp"
#include "support/generators.hpp"

#include <gtest/gtest.h>

namespace terrace {
namespace {

using testing::Gen;

std::vector<Rational> R(std::initializer_list<const char*> xs) {
  std::vector<Rational> out;
  for (auto x : xs) out.push_back(Rational::parse(x));
  return out;
}

MarginalSet M(std::initializer_list<const char*> xs) { return MarginalSet::numbered(R(xs)); }

void expect_feasible_witness(const JointDistribution& w, const MarginalSet& m) {
  // JointDistribution's constructor already enforced [0,1] cells and sum 1.
  EXPECT_TRUE(w.has_marginals(m));
  EXPECT_EQ(w.events(), m.events());
}

TEST(BruteForceOracle, FrozenDoubletValues) {
  const auto b = testing::brute_force_bounds(R({"9/20", "2/5"}));
  EXPECT_EQ(b.lower, R({"3/20", "1/20", "0", "0"}));
  EXPECT_EQ(b.upper, R({"11/20", "9/20", "2/5", "2/5"}));
  const auto c = testing::brute_force_bounds(R({"7/10", "2/5"}));
  EXPECT_EQ(c.lower[1], Rational(3, 10));
  const auto d = testing::brute_force_bounds(R({"1/2", "1/10"}));
  EXPECT_EQ(d.lower[1], Rational(2, 5));
}

TEST(LpExtremize, DoubletEmptySetMax) {
  const auto m = M({"9/20", "2/5"});
  const auto r = lp_extremize_terrace(SubsetIndex::empty(), m, Direction::Max);
  EXPECT_EQ(r.value, Rational(11, 20));
  EXPECT_EQ(r.witness[SubsetIndex::empty()], Rational(11, 20));
  expect_feasible_witness(r.witness, m);
}

TEST(LpExtremize, DoubletSingletonMin) {
  const auto m = M({"9/20", "2/5"});
  const auto r = lp_extremize_terrace(SubsetIndex{1}, m, Direction::Min);
  EXPECT_EQ(r.value, Rational(1, 20));
  expect_feasible_witness(r.witness, m);
}

TEST(LpExtremize, RejectsLargeSets) {
  try {
    lp_extremize_terrace(SubsetIndex::empty(), MarginalSet::numbered(std::vector<Rational>(7, Rational(1, 3))),
                         Direction::Max);
    FAIL();
  } catch (const Error& e) {
    EXPECT_EQ(e.code(), ErrorCode::TooLarge);
  }
  EXPECT_THROW(verify_bounds(MarginalSet::numbered(std::vector<Rational>(7, Rational(1, 3)))), Error);
}

TEST(LpExtremize, AgreesWithVertexEnumeration) {
  Gen gen(41);
  for (int trial = 0; trial < 40; ++trial) {
    const auto m = trial % 2 ? gen.marginals(gen.between(1, 4)) : gen.half_rare(gen.between(1, 4));
    const auto brute = testing::brute_force_bounds({m.probs().begin(), m.probs().end()});
    for (auto x : subset_iter(m.size())) {
      const auto lo = lp_extremize_terrace(x, m, Direction::Min);
      const auto hi = lp_extremize_terrace(x, m, Direction::Max);
      ASSERT_EQ(lo.value, brute.lower[x.bits]);
      ASSERT_EQ(hi.value, brute.upper[x.bits]);
      ASSERT_EQ(lo.witness[x], lo.value);
      ASSERT_EQ(hi.witness[x], hi.value);
      ASSERT_TRUE(lo.witness.has_marginals(m));
      ASSERT_TRUE(hi.witness.has_marginals(m));
    }
  }
}

TEST(VerifyBounds, Doublet) {
  const auto r = verify_bounds(M({"9/20", "2/5"}));
  EXPECT_TRUE(r.pass);
  EXPECT_EQ(r.records.size(), 4u);
  EXPECT_EQ(r.first_mismatch(), nullptr);
}

TEST(VerifyBounds, Pentaplet) {
  const auto r = verify_bounds(M({"9/20", "2/5", "7/20", "3/10", "1/4"}));
  EXPECT_TRUE(r.pass);
  for (const auto& rec : r.records) EXPECT_EQ(rec.lp_min, Rational(0));
}

TEST(VerifyBounds, DegeneratePolytope) {
  const auto r = verify_bounds(M({"1", "0"}));
  EXPECT_TRUE(r.pass);
  EXPECT_EQ(r.records[1].lp_min, Rational(1));
  EXPECT_EQ(r.records[1].lp_max, Rational(1));
}

TEST(VerifyBounds, WorkerCountDoesNotChangeTheReport) {
  const auto m = M({"7/10", "2/5", "1/3", "5/8"});
  const auto serial = verify_bounds(m, 1);
  const auto parallel = verify_bounds(m, 4);
  ASSERT_EQ(serial.records.size(), parallel.records.size());
  for (std::size_t k = 0; k < serial.records.size(); ++k) {
    EXPECT_EQ(serial.records[k].subset, parallel.records[k].subset);
    EXPECT_EQ(serial.records[k].lp_min, parallel.records[k].lp_min);
    EXPECT_EQ(serial.records[k].lp_max, parallel.records[k].lp_max);
    EXPECT_EQ(serial.records[k].witness_min, parallel.records[k].witness_min);
  }
  EXPECT_TRUE(parallel.pass);
}

TEST(VerifyBounds, DetectsAWrongClosedForm) {
  // Tamper with a record to make sure a mismatch is reported, not swallowed.
  auto r = verify_bounds(M({"9/20", "2/5"}));
  r.records[2].closed_form_upper = Rational(1, 2);
  ASSERT_NE(r.first_mismatch(), nullptr);
  EXPECT_EQ(r.first_mismatch()->subset, SubsetIndex{2});
}

TEST(RandomMarginals, DeterministicAndBounded) {
  EXPECT_EQ(random_marginals(2, 7, false), random_marginals(2, 7, false));
  EXPECT_NE(random_marginals(4, 7, false), random_marginals(4, 8, false));
  for (std::uint64_t seed = 0; seed < 200; ++seed) {
    const auto m = random_marginals(6, seed, false);
    for (const auto& p : m.probs()) {
      ASSERT_LE(p.backend().convert_to<double>(), 1.0);
      ASSERT_LE(std::stoll(p.denominator_string()), 1000);
    }
  }
}

TEST(RandomMarginals, HalfRareFlag) {
  EXPECT_TRUE(is_half_rare(random_marginals(3, 42, true)));
  for (std::uint64_t seed = 0; seed < 200; ++seed) ASSERT_TRUE(is_half_rare(random_marginals(8, seed, true)));
  EXPECT_THROW(random_marginals(0, 1, true), Error);
  EXPECT_THROW(random_marginals(21, 1, true), Error);
}

// ---- properties -------------------------------------------------------------

TEST(OracleProperty, ClosedFormsAreSharp) {
  Gen gen(51);
  for (int trial = 0; trial < 30; ++trial) {
    const auto m = trial % 2 ? gen.marginals(gen.between(1, 5)) : gen.half_rare(gen.between(1, 5));
    const auto r = verify_bounds(m);
    ASSERT_TRUE(r.pass) << "trial " << trial;
    for (const auto& rec : r.records) {
      ASSERT_TRUE(rec.witness_min.has_marginals(m));
      ASSERT_TRUE(rec.witness_max.has_marginals(m));
      ASSERT_EQ(rec.witness_min[rec.subset], rec.lp_min);
      ASSERT_EQ(rec.witness_max[rec.subset], rec.lp_max);
    }
  }
}

TEST(OracleProperty, LpNeverExceedsUpperFormula) {
  Gen gen(52);
  for (int trial = 0; trial < 20; ++trial) {
    const auto m = gen.marginals(gen.between(1, 4));
    for (auto x : subset_iter(m.size())) {
      ASSERT_LE(lp_extremize_terrace(x, m, Direction::Max).value, upper_bound_general(x, m));
      ASSERT_GE(lp_extremize_terrace(x, m, Direction::Min).value, lower_bound_general(x, m));
    }
  }
}

// The LP alone re-derives the zero pattern of the half-rare lower bound.
TEST(OracleProperty, HalfRareZeroPatternViaLp) {
  Gen gen(53);
  for (int trial = 0; trial < 20; ++trial) {
    const auto m = gen.half_rare(gen.between(2, 5));
    for (auto x : subset_iter(m.size())) {
      if (x.is_empty() || x == SubsetIndex::singleton(0)) continue;
      ASSERT_EQ(lp_extremize_terrace(x, m, Direction::Min).value, Rational(0));
    }
  }
}

}  // namespace
}  // namespace terrace
