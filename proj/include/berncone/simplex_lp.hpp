#pragma once

#include <Eigen/Dense>

#include <vector>

#include "berncone/errors.hpp"
#include "berncone/rational.hpp"

namespace berncone {

enum class LpStatus { optimal, infeasible, unbounded };

template <typename Scalar>
struct LpSolution {
  LpStatus status = LpStatus::infeasible;
  Scalar objective{};                          // valid when optimal
  Eigen::Matrix<Scalar, Eigen::Dynamic, 1> x;  // valid when optimal
};

/// Dense two-phase primal simplex over an exact scalar type:
///
///   maximize c^T x   subject to   A x = b,  x >= 0.
///
/// Bland's rule (lowest eligible index enters; ties in the ratio test break
/// towards the lowest basic index) gives termination without tolerances and
/// a deterministic pivot sequence, so optimal witnesses are reproducible
/// across runs and platforms. Intended for desk-scale problems (up to a few
/// hundred variables); every entry stays exact throughout.
template <typename Scalar>
class DenseSimplex {
 public:
  using Matrix = Eigen::Matrix<Scalar, Eigen::Dynamic, Eigen::Dynamic>;
  using Vector = Eigen::Matrix<Scalar, Eigen::Dynamic, 1>;

  static LpSolution<Scalar> maximize(Matrix A, Vector b, Vector c) {
    if (A.rows() != b.size() || A.cols() != c.size()) {
      throw std::invalid_argument("LP dimensions disagree");
    }
    DenseSimplex lp(std::move(A), std::move(b), std::move(c));
    return lp.run();
  }

  /// Phase-one only: is {x >= 0 : A x = b} nonempty? Returns a point when so.
  static LpSolution<Scalar> find_feasible(Matrix A, Vector b) {
    const Eigen::Index n = A.cols();
    return maximize(std::move(A), std::move(b), Vector::Zero(n));
  }

 private:
  DenseSimplex(Matrix A, Vector b, Vector c)
      : A_(std::move(A)), b_(std::move(b)), c_(std::move(c)) {}

  LpSolution<Scalar> run() {
    const Eigen::Index n = A_.cols();
    const Eigen::Index m = A_.rows();
    if (m == 0) return solve_unconstrained();

    for (Eigen::Index i = 0; i < m; ++i) {
      if (b_(i) < 0) {
        A_.row(i) = -A_.row(i);
        b_(i) = -b_(i);
      }
    }

    // Phase one tableau [A | I] with artificial basis; maximize -sum(artificials).
    tableau_.resize(m, n + m);
    tableau_.leftCols(n) = A_;
    tableau_.rightCols(m) = Matrix::Identity(m, m);
    rhs_ = b_;
    basis_.resize(m);
    for (Eigen::Index i = 0; i < m; ++i) basis_[i] = n + i;

    Vector phase1_cost = Vector::Zero(n + m);
    for (Eigen::Index j = n; j < n + m; ++j) phase1_cost(j) = Scalar(-1);
    install_costs(phase1_cost);
    pivot_until_optimal();
    if (objective_ < 0) return {LpStatus::infeasible, Scalar(0), Vector()};

    drive_out_artificials(n);

    // Phase two on the original columns only.
    Matrix phase2 = tableau_.leftCols(n).eval();
    tableau_.swap(phase2);
    install_costs(c_);
    if (!pivot_until_optimal()) return {LpStatus::unbounded, Scalar(0), Vector()};

    LpSolution<Scalar> solution;
    solution.status = LpStatus::optimal;
    solution.objective = objective_;
    solution.x = Vector::Zero(n);
    for (std::size_t i = 0; i < basis_.size(); ++i) {
      solution.x(basis_[i]) = rhs_(static_cast<Eigen::Index>(i));
    }
    return solution;
  }

  LpSolution<Scalar> solve_unconstrained() {
    for (Eigen::Index j = 0; j < c_.size(); ++j) {
      if (c_(j) > 0) return {LpStatus::unbounded, Scalar(0), Vector()};
    }
    return {LpStatus::optimal, Scalar(0), Vector::Zero(c_.size())};
  }

  // Reduced costs r_j = cost_j - cost_B^T T_j and objective = cost_B^T rhs.
  void install_costs(const Vector& cost) {
    cost_ = cost;
    reduced_ = cost;
    objective_ = Scalar(0);
    for (std::size_t i = 0; i < basis_.size(); ++i) {
      const Scalar& cb = cost_(basis_[i]);
      if (cb == 0) continue;
      reduced_ -= cb * tableau_.row(static_cast<Eigen::Index>(i)).transpose();
      objective_ += cb * rhs_(static_cast<Eigen::Index>(i));
    }
  }

  /// Returns false on unboundedness.
  bool pivot_until_optimal() {
    const Eigen::Index cols = tableau_.cols();
    for (;;) {
      Eigen::Index entering = -1;
      for (Eigen::Index j = 0; j < cols; ++j) {
        if (reduced_(j) > 0) {
          entering = j;
          break;
        }
      }
      if (entering < 0) return true;

      Eigen::Index leaving = -1;
      Scalar best_ratio{};
      for (Eigen::Index i = 0; i < tableau_.rows(); ++i) {
        if (tableau_(i, entering) <= 0) continue;
        Scalar ratio = rhs_(i) / tableau_(i, entering);
        if (leaving < 0 || ratio < best_ratio ||
            (ratio == best_ratio && basis_[i] < basis_[leaving])) {
          leaving = i;
          best_ratio = ratio;
        }
      }
      if (leaving < 0) return false;
      pivot(leaving, entering);
    }
  }

  void pivot(Eigen::Index row, Eigen::Index col) {
    const Scalar pivot_value = tableau_(row, col);
    tableau_.row(row) /= pivot_value;
    rhs_(row) /= pivot_value;
    for (Eigen::Index i = 0; i < tableau_.rows(); ++i) {
      if (i == row) continue;
      const Scalar factor = tableau_(i, col);
      if (factor == 0) continue;
      tableau_.row(i) -= factor * tableau_.row(row);
      rhs_(i) -= factor * rhs_(row);
    }
    const Scalar reduced_factor = reduced_(col);
    if (reduced_factor != 0) {
      reduced_ -= reduced_factor * tableau_.row(row).transpose();
      objective_ += reduced_factor * rhs_(row);
    }
    basis_[row] = col;
  }

  /// After phase one, pivot artificial variables out of the basis; rows in
  /// which that is impossible are redundant equalities and get dropped.
  void drive_out_artificials(Eigen::Index n) {
    for (Eigen::Index i = 0; i < static_cast<Eigen::Index>(basis_.size());) {
      if (basis_[i] < n) {
        ++i;
        continue;
      }
      Eigen::Index col = -1;
      for (Eigen::Index j = 0; j < n; ++j) {
        if (tableau_(i, j) != 0) {
          col = j;
          break;
        }
      }
      if (col >= 0) {
        pivot(i, col);
        ++i;
      } else {
        remove_row(i);
      }
    }
  }

  void remove_row(Eigen::Index row) {
    const Eigen::Index m = tableau_.rows();
    for (Eigen::Index i = row; i + 1 < m; ++i) {
      tableau_.row(i) = tableau_.row(i + 1);
      rhs_(i) = rhs_(i + 1);
      basis_[i] = basis_[i + 1];
    }
    tableau_.conservativeResize(m - 1, Eigen::NoChange);
    rhs_.conservativeResize(m - 1);
    basis_.pop_back();
  }

  Matrix A_;
  Vector b_, c_;
  Matrix tableau_;
  Vector rhs_;
  Vector cost_, reduced_;
  Scalar objective_{};
  std::vector<Eigen::Index> basis_;
};

using RationalSimplex = DenseSimplex<Rational>;

}  // namespace berncone
