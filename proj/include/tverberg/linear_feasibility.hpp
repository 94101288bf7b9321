#pragma once

#include "tverberg/rational.hpp"

#include <optional>
#include <vector>

namespace tverberg {

/// Outcome of an exact linear program in standard form
///   minimize c.x  subject to  A x = b,  x >= 0.
template <typename Scalar>
struct LinearProgramResult {
  enum class Status { Optimal, Infeasible, Unbounded };

  Status status = Status::Infeasible;
  /// Basic solution; meaningful unless Infeasible.
  VectorX<Scalar> x;
  Scalar objective{0};
  /// Phase-one optimum (sum of artificial variables). Zero iff feasible; for
  /// infeasible systems it measures how far the system is from feasibility.
  Scalar infeasibility{0};

  bool feasible() const { return status != Status::Infeasible; }
};

namespace detail {

/// Dense simplex tableau. Column layout: structural columns, then one
/// artificial column per row, then the right-hand side.
template <typename Scalar>
class Tableau {
 public:
  Tableau(const MatrixX<Scalar>& A, const VectorX<Scalar>& b)
      : rows_(A.rows()), cols_(A.cols()), table_(A.rows() + 1, A.cols() + A.rows() + 1), basis_(A.rows()) {
    table_.setZero();
    for (Eigen::Index r = 0; r < rows_; ++r) {
      const bool flip = b[r] < 0;
      for (Eigen::Index c = 0; c < cols_; ++c) table_(r, c) = flip ? Scalar(-A(r, c)) : A(r, c);
      table_(r, cols_ + r) = 1;
      table_(r, rhs()) = flip ? Scalar(-b[r]) : b[r];
      basis_[r] = cols_ + r;
    }
  }

  Eigen::Index rhs() const { return cols_ + rows_; }

  /// Phase one: minimizes the sum of artificials. Returns that minimum.
  Scalar phase_one() {
    set_objective_row([&](Eigen::Index c) { return c >= cols_ && c < cols_ + rows_ ? Scalar(1) : Scalar(0); });
    iterate(cols_ + rows_);
    return Scalar(-table_(rows_, rhs()));
  }

  /// Pivots artificials out of the basis where possible; rows that stay
  /// artificial are redundant and are zeroed.
  void expel_artificials() {
    for (Eigen::Index r = 0; r < rows_; ++r) {
      if (basis_[r] < cols_) continue;
      Eigen::Index col = -1;
      for (Eigen::Index c = 0; c < cols_; ++c)
        if (table_(r, c) != 0) {
          col = c;
          break;
        }
      if (col >= 0) pivot(r, col);
    }
  }

  /// Phase two for objective `c` over structural columns. Returns false when
  /// the objective is unbounded below.
  bool phase_two(const VectorX<Scalar>& c) {
    set_objective_row([&](Eigen::Index j) { return j < cols_ ? c[j] : Scalar(0); });
    return iterate(cols_);
  }

  VectorX<Scalar> solution() const {
    VectorX<Scalar> x = VectorX<Scalar>::Zero(cols_);
    for (Eigen::Index r = 0; r < rows_; ++r)
      if (basis_[r] < cols_) x[basis_[r]] = table_(r, rhs());
    return x;
  }

 private:
  template <typename CostFn>
  void set_objective_row(CostFn cost) {
    for (Eigen::Index c = 0; c <= rhs(); ++c) table_(rows_, c) = c < rhs() ? cost(c) : Scalar(0);
    for (Eigen::Index r = 0; r < rows_; ++r) {
      Scalar cb = cost(basis_[r]);
      if (cb == 0) continue;
      for (Eigen::Index c = 0; c <= rhs(); ++c)
        if (table_(r, c) != 0) table_(rows_, c) -= cb * table_(r, c);
    }
  }

  /// Bland's rule: smallest improving column enters, smallest basic index
  /// leaves among ratio ties. Only columns < `allowed` may enter.
  bool iterate(Eigen::Index allowed) {
    for (;;) {
      Eigen::Index enter = -1;
      for (Eigen::Index c = 0; c < allowed; ++c)
        if (table_(rows_, c) < 0) {
          enter = c;
          break;
        }
      if (enter < 0) return true;
      Eigen::Index leave = -1;
      Scalar best;
      for (Eigen::Index r = 0; r < rows_; ++r) {
        if (table_(r, enter) <= 0) continue;
        Scalar ratio = table_(r, rhs()) / table_(r, enter);
        if (leave < 0 || ratio < best || (ratio == best && basis_[r] < basis_[leave])) {
          leave = r;
          best = ratio;
        }
      }
      if (leave < 0) return false;
      pivot(leave, enter);
    }
  }

  void pivot(Eigen::Index r, Eigen::Index c) {
    const Scalar p = table_(r, c);
    for (Eigen::Index j = 0; j <= rhs(); ++j)
      if (table_(r, j) != 0) table_(r, j) /= p;
    for (Eigen::Index i = 0; i <= rows_; ++i) {
      if (i == r) continue;
      const Scalar f = table_(i, c);
      if (f == 0) continue;
      for (Eigen::Index j = 0; j <= rhs(); ++j)
        if (table_(r, j) != 0) table_(i, j) -= f * table_(r, j);
    }
    basis_[r] = c;
  }

  Eigen::Index rows_, cols_;
  MatrixX<Scalar> table_;
  std::vector<Eigen::Index> basis_;
};

}  // namespace detail

/// Two-phase exact simplex with Bland's anti-cycling rule. Without an
/// objective the result is the canonical basic feasible point reached by
/// phase one.
template <typename Scalar>
LinearProgramResult<Scalar> solve_linear_program(const MatrixX<Scalar>& A, const VectorX<Scalar>& b,
                                                 const VectorX<Scalar>* objective = nullptr) {
  LinearProgramResult<Scalar> out;
  detail::Tableau<Scalar> tableau(A, b);
  out.infeasibility = tableau.phase_one();
  if (out.infeasibility != 0) {
    out.status = LinearProgramResult<Scalar>::Status::Infeasible;
    return out;
  }
  tableau.expel_artificials();
  out.status = LinearProgramResult<Scalar>::Status::Optimal;
  if (objective) {
    if (!tableau.phase_two(*objective)) {
      out.status = LinearProgramResult<Scalar>::Status::Unbounded;
      out.x = tableau.solution();
      return out;
    }
  }
  out.x = tableau.solution();
  if (objective) out.objective = objective->dot(out.x);
  return out;
}

/// A nonzero vector in the kernel of M, or nullopt if M has full column rank.
/// Fraction-based Gauss-Jordan elimination; exact for exact scalars.
template <typename Scalar>
std::optional<VectorX<Scalar>> kernel_vector(MatrixX<Scalar> M) {
  const Eigen::Index rows = M.rows(), cols = M.cols();
  std::vector<Eigen::Index> pivot_col;
  Eigen::Index r = 0;
  std::vector<bool> is_pivot(static_cast<std::size_t>(cols), false);
  for (Eigen::Index c = 0; c < cols && r < rows; ++c) {
    Eigen::Index p = -1;
    for (Eigen::Index i = r; i < rows; ++i)
      if (M(i, c) != 0) {
        p = i;
        break;
      }
    if (p < 0) continue;
    M.row(r).swap(M.row(p));
    const Scalar inv = Scalar(1) / M(r, c);
    for (Eigen::Index j = 0; j < cols; ++j) M(r, j) *= inv;
    for (Eigen::Index i = 0; i < rows; ++i) {
      if (i == r || M(i, c) == 0) continue;
      const Scalar f = M(i, c);
      for (Eigen::Index j = 0; j < cols; ++j) M(i, j) -= f * M(r, j);
    }
    pivot_col.push_back(c);
    is_pivot[static_cast<std::size_t>(c)] = true;
    ++r;
  }
  Eigen::Index free = -1;
  for (Eigen::Index c = 0; c < cols; ++c)
    if (!is_pivot[static_cast<std::size_t>(c)]) {
      free = c;
      break;
    }
  if (free < 0) return std::nullopt;
  VectorX<Scalar> v = VectorX<Scalar>::Zero(cols);
  v[free] = 1;
  for (std::size_t i = 0; i < pivot_col.size(); ++i) v[pivot_col[i]] = -M(static_cast<Eigen::Index>(i), free);
  return v;
}

}  // namespace tverberg
