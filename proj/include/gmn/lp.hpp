#pragma once

#include <Eigen/Dense>

namespace gmn::lp {

enum class Status { Optimal, Infeasible, Unbounded, IterationLimit };

/// Outcome of a standard-form solve.  For Status::Infeasible, `farkas`
/// holds a certificate y with yᵀA ≤ 0 (componentwise over columns) and
/// yᵀb = infeasibility > 0.
struct Result {
  Status status = Status::IterationLimit;
  Eigen::VectorXd x;
  Eigen::VectorXd farkas;
  double objective = 0.0;
  double infeasibility = 0.0;
  int iterations = 0;
};

/// Maximizes cᵀx subject to A x = b, x ≥ 0.
///
/// Dense two-phase primal simplex with Bland's anti-cycling rule; the basis
/// is refactorized every iteration, which is plenty fast at the problem
/// sizes this project produces (a few hundred columns). Redundant equality
/// rows are tolerated: their artificials simply stay basic at level zero.
Result solve_standard_form(const Eigen::MatrixXd& A, const Eigen::VectorXd& b,
                           const Eigen::VectorXd& c, double feas_tol = 1e-9);

}  // namespace gmn::lp
