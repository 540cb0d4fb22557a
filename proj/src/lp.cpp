#include "gmn/lp.hpp"

#include <cmath>
#include <limits>
#include <stdexcept>
#include <vector>

namespace gmn::lp {

namespace {

constexpr double kPivotTol = 1e-10;

// One primal simplex pass on min cᵀx, A x = b, x ≥ 0 starting from the
// given basis. `allowed` masks columns that may enter. Returns false when
// the iteration limit was hit.
struct SimplexState {
  Eigen::MatrixXd A;
  Eigen::VectorXd b;
  std::vector<int> basis;
  Eigen::VectorXd x_basic;
  Eigen::VectorXd y;  // simplex multipliers of the last optimal basis
  int iterations = 0;
};

enum class PassOutcome { Optimal, Unbounded, IterationLimit };

PassOutcome run_simplex(SimplexState& st, const Eigen::VectorXd& cost,
                        const std::vector<bool>& allowed, int max_iters) {
  const int m = static_cast<int>(st.A.rows());
  const int n = static_cast<int>(st.A.cols());

  Eigen::MatrixXd B(m, m);
  while (true) {
    for (int i = 0; i < m; ++i) B.col(i) = st.A.col(st.basis[i]);
    Eigen::PartialPivLU<Eigen::MatrixXd> lu(B);
    st.x_basic = lu.solve(st.b);

    Eigen::VectorXd cb(m);
    for (int i = 0; i < m; ++i) cb(i) = cost(st.basis[i]);
    st.y = lu.transpose().solve(cb);

    // Bland: first admissible column with negative reduced cost.
    int entering = -1;
    for (int j = 0; j < n; ++j) {
      if (!allowed[j]) continue;
      bool basic = false;
      for (int i = 0; i < m; ++i)
        if (st.basis[i] == j) { basic = true; break; }
      if (basic) continue;
      const double reduced = cost(j) - st.y.dot(st.A.col(j));
      if (reduced < -kPivotTol) { entering = j; break; }
    }
    if (entering < 0) return PassOutcome::Optimal;

    Eigen::VectorXd d = lu.solve(st.A.col(entering));

    // Ratio test, Bland tie-break on the smallest leaving variable index.
    int leave = -1;
    double best_ratio = std::numeric_limits<double>::infinity();
    for (int i = 0; i < m; ++i) {
      if (d(i) > kPivotTol) {
        const double ratio = std::max(st.x_basic(i), 0.0) / d(i);
        if (ratio < best_ratio - 1e-12 ||
            (ratio < best_ratio + 1e-12 &&
             (leave < 0 || st.basis[i] < st.basis[leave]))) {
          best_ratio = ratio;
          leave = i;
        }
      }
    }
    if (leave < 0) return PassOutcome::Unbounded;

    st.basis[leave] = entering;
    if (++st.iterations >= max_iters) return PassOutcome::IterationLimit;
  }
}

}  // namespace

Result solve_standard_form(const Eigen::MatrixXd& A, const Eigen::VectorXd& b,
                           const Eigen::VectorXd& c, double feas_tol) {
  const int m = static_cast<int>(A.rows());
  const int n = static_cast<int>(A.cols());
  if (b.size() != m || c.size() != n)
    throw std::invalid_argument("lp: inconsistent problem dimensions");

  // Standardize to b ≥ 0 and append one artificial per row.
  Eigen::MatrixXd Aw(m, n + m);
  Eigen::VectorXd bw = b;
  Aw.leftCols(n) = A;
  Aw.rightCols(m).setZero();
  for (int i = 0; i < m; ++i) {
    if (bw(i) < 0) {
      bw(i) = -bw(i);
      Aw.row(i).head(n) = -Aw.row(i).head(n);
    }
    Aw(i, n + i) = 1.0;
  }

  SimplexState st;
  st.A = std::move(Aw);
  st.b = std::move(bw);
  st.basis.resize(m);
  for (int i = 0; i < m; ++i) st.basis[i] = n + i;

  const int max_iters = 50 * (n + m) + 1000;

  // Phase 1: minimize the sum of artificials.
  Eigen::VectorXd phase1_cost = Eigen::VectorXd::Zero(n + m);
  phase1_cost.tail(m).setOnes();
  std::vector<bool> all_cols(n + m, true);

  Result res;
  PassOutcome out = run_simplex(st, phase1_cost, all_cols, max_iters);
  res.iterations = st.iterations;
  if (out == PassOutcome::IterationLimit) {
    res.status = Status::IterationLimit;
    return res;
  }

  double phase1_obj = 0.0;
  for (int i = 0; i < m; ++i)
    if (st.basis[i] >= n) phase1_obj += std::max(st.x_basic(i), 0.0);

  if (phase1_obj > feas_tol) {
    res.status = Status::Infeasible;
    res.infeasibility = phase1_obj;
    // Multipliers of the optimal phase-1 basis: yᵀA_j ≤ 0 for every real
    // column (reduced cost 0 - yᵀA_j ≥ 0) and yᵀb = phase-1 objective > 0.
    Eigen::VectorXd y = st.y;
    // Undo the row sign flips applied during standardization.
    for (int i = 0; i < m; ++i)
      if (b(i) < 0) y(i) = -y(i);
    res.farkas = y;
    return res;
  }

  // Phase 2: artificials are frozen out of the entering set. Any still
  // basic sit at level zero and stay there because their columns are unit
  // vectors of redundant/satisfied rows.
  Eigen::VectorXd phase2_cost = Eigen::VectorXd::Zero(n + m);
  phase2_cost.head(n) = -c;  // maximize c  ==  minimize -c
  std::vector<bool> real_cols(n + m, false);
  for (int j = 0; j < n; ++j) real_cols[j] = true;

  out = run_simplex(st, phase2_cost, real_cols, max_iters);
  res.iterations = st.iterations;
  if (out == PassOutcome::IterationLimit) {
    res.status = Status::IterationLimit;
    return res;
  }
  if (out == PassOutcome::Unbounded) {
    res.status = Status::Unbounded;
    return res;
  }

  res.status = Status::Optimal;
  res.x = Eigen::VectorXd::Zero(n);
  for (int i = 0; i < m; ++i)
    if (st.basis[i] < n) res.x(st.basis[i]) = std::max(st.x_basic(i), 0.0);
  res.objective = c.dot(res.x);
  return res;
}

}  // namespace gmn::lp
