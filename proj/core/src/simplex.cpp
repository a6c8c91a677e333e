#include "terrace/simplex.hpp"

#include "terrace/errors.hpp"

#include <optional>

namespace terrace::lp {

namespace {

class Tableau {
 public:
  Tableau(const Problem& p) : m_(p.rows), n_(p.cols), width_(p.cols + p.rows + 1) {
    if (p.a.size() != m_ * n_ || p.b.size() != m_ || p.c.size() != n_) {
      throw Error(ErrorCode::DimensionMismatch, "LP dimensions are inconsistent");
    }
    t_.assign(m_ * width_, Rational{});
    basis_.resize(m_);
    active_.assign(m_, true);
    for (std::size_t r = 0; r < m_; ++r) {
      const bool flip = p.b[r] < 0;
      for (std::size_t j = 0; j < n_; ++j) cell(r, j) = flip ? -p.at(r, j) : p.at(r, j);
      cell(r, n_ + r) = 1;
      rhs(r) = flip ? -p.b[r] : p.b[r];
      basis_[r] = n_ + r;
    }
  }

  Solution solve(const Problem& p) {
    Solution out;

    // Phase 1: maximize -(sum of artificials).
    std::vector<Rational> phase1(n_ + m_);
    for (std::size_t r = 0; r < m_; ++r) phase1[n_ + r] = -1;
    if (!run(phase1, n_ + m_, out.pivots)) {
      throw Error(ErrorCode::Infeasible, "phase 1 reported unbounded, which is impossible");
    }
    if (objective(phase1) < 0) {
      out.status = Status::Infeasible;
      return out;
    }
    drive_out_artificials(out.pivots);

    // Phase 2 on the original objective; artificial columns may no longer enter.
    std::vector<Rational> phase2(n_ + m_);
    for (std::size_t j = 0; j < n_; ++j) phase2[j] = p.c[j];
    if (!run(phase2, n_, out.pivots)) {
      out.status = Status::Unbounded;
      return out;
    }
    out.status = Status::Optimal;
    out.value = objective(phase2);
    out.x.assign(n_, Rational{});
    for (std::size_t r = 0; r < m_; ++r) {
      if (active_[r] && basis_[r] < n_) out.x[basis_[r]] = rhs(r);
    }
    return out;
  }

 private:
  Rational& cell(std::size_t r, std::size_t j) { return t_[r * width_ + j]; }
  Rational& rhs(std::size_t r) { return t_[r * width_ + width_ - 1]; }

  Rational objective(const std::vector<Rational>& cost) {
    Rational v;
    for (std::size_t r = 0; r < m_; ++r) {
      if (active_[r]) v += cost[basis_[r]] * rhs(r);
    }
    return v;
  }

  // Reduced costs d_j = c_j - c_B^T B^{-1} A_j for the current basis.
  std::vector<Rational> reduced_costs(const std::vector<Rational>& cost) {
    std::vector<Rational> d(cost.begin(), cost.end());
    for (std::size_t r = 0; r < m_; ++r) {
      const Rational& cb = cost[basis_[r]];
      if (!active_[r] || cb.is_zero()) continue;
      for (std::size_t j = 0; j < n_ + m_; ++j) {
        if (!cell(r, j).is_zero()) d[j] -= cb * cell(r, j);
      }
    }
    return d;
  }

  void pivot(std::size_t row, std::size_t col, std::vector<Rational>* d) {
    const Rational inv = Rational(1) / cell(row, col);
    for (std::size_t j = 0; j < width_; ++j) {
      if (!cell(row, j).is_zero()) cell(row, j) *= inv;
    }
    for (std::size_t r = 0; r < m_; ++r) {
      if (r == row || !active_[r] || cell(r, col).is_zero()) continue;
      const Rational f = cell(r, col);
      for (std::size_t j = 0; j < width_; ++j) {
        if (!cell(row, j).is_zero()) cell(r, j) -= f * cell(row, j);
      }
    }
    if (d != nullptr && !(*d)[col].is_zero()) {
      const Rational f = (*d)[col];
      for (std::size_t j = 0; j < n_ + m_; ++j) {
        if (!cell(row, j).is_zero()) (*d)[j] -= f * cell(row, j);
      }
    }
    basis_[row] = col;
  }

  // Returns false when the objective is unbounded in some entering direction.
  bool run(const std::vector<Rational>& cost, std::size_t enterable, std::size_t& pivots) {
    auto d = reduced_costs(cost);
    for (;;) {
      std::optional<std::size_t> enter;
      for (std::size_t j = 0; j < enterable; ++j) {
        if (d[j] > 0) {
          enter = j;
          break;
        }
      }
      if (!enter) return true;

      std::optional<std::size_t> leave;
      Rational best;
      for (std::size_t r = 0; r < m_; ++r) {
        if (!active_[r] || cell(r, *enter) <= 0) continue;
        Rational ratio = rhs(r) / cell(r, *enter);
        if (!leave || ratio < best || (ratio == best && basis_[r] < basis_[*leave])) {
          leave = r;
          best = std::move(ratio);
        }
      }
      if (!leave) return false;
      pivot(*leave, *enter, &d);
      ++pivots;
    }
  }

  void drive_out_artificials(std::size_t& pivots) {
    for (std::size_t r = 0; r < m_; ++r) {
      if (basis_[r] < n_) continue;
      std::optional<std::size_t> col;
      for (std::size_t j = 0; j < n_; ++j) {
        if (!cell(r, j).is_zero()) {
          col = j;
          break;
        }
      }
      if (col) {
        pivot(r, *col, nullptr);
        ++pivots;
      } else {
        active_[r] = false;  // redundant equality
      }
    }
  }

  std::size_t m_;
  std::size_t n_;
  std::size_t width_;
  std::vector<Rational> t_;
  std::vector<std::size_t> basis_;
  std::vector<bool> active_;
};

}  // namespace

Solution maximize(const Problem& problem) {
  Tableau tableau(problem);
  return tableau.solve(problem);
}

}  // namespace terrace::lp
