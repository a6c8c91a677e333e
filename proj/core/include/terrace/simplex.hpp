#pragma once

#include "terrace/rational.hpp"

#include <cstddef>
#include <vector>

namespace terrace::lp {

/// maximize c^T x  subject to  A x = b, x >= 0.  A is row-major, rows x cols.
struct Problem {
  std::size_t rows = 0;
  std::size_t cols = 0;
  std::vector<Rational> a;
  std::vector<Rational> b;
  std::vector<Rational> c;

  Rational& at(std::size_t r, std::size_t j) { return a[r * cols + j]; }
  const Rational& at(std::size_t r, std::size_t j) const { return a[r * cols + j]; }
};

enum class Status { Optimal, Infeasible, Unbounded };

struct Solution {
  Status status = Status::Infeasible;
  Rational value;
  std::vector<Rational> x;
  std::size_t pivots = 0;
};

/**
 * Two-phase primal simplex on a dense tableau in exact arithmetic.
 *
 * Phase 1 minimizes the sum of one artificial per row; artificials left in the
 * basis at level zero are pivoted out, and rows where that is impossible are
 * linearly dependent and dropped. Both phases use Bland's rule (lowest-index
 * entering column, lowest-index leaving variable among ratio ties), so the
 * method terminates on degenerate problems.
 */
Solution maximize(const Problem& problem);

}  // namespace terrace::lp
