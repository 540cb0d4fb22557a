#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include <Eigen/Dense>
#include <random>

#include "gmn/lp.hpp"

using Eigen::MatrixXd;
using Eigen::VectorXd;
using gmn::lp::Status;

TEST_CASE("bounded maximization reaches the known optimum") {
  // max x0 + 2 x1  s.t.  x0 + x1 + s0 = 4,  x1 + s1 = 3,  all >= 0.
  MatrixXd A(2, 4);
  A << 1, 1, 1, 0,
       0, 1, 0, 1;
  VectorXd b(2), c(4);
  b << 4, 3;
  c << 1, 2, 0, 0;
  const auto res = gmn::lp::solve_standard_form(A, b, c);
  REQUIRE(res.status == Status::Optimal);
  CHECK(res.objective == doctest::Approx(7.0));  // x = (1, 3)
  CHECK(res.x(0) == doctest::Approx(1.0));
  CHECK(res.x(1) == doctest::Approx(3.0));
}

TEST_CASE("degenerate equalities are handled") {
  // Duplicate rows: x0 + x1 = 1 stated twice.
  MatrixXd A(2, 2);
  A << 1, 1,
       1, 1;
  VectorXd b(2), c(2);
  b << 1, 1;
  c << 3, 1;
  const auto res = gmn::lp::solve_standard_form(A, b, c);
  REQUIRE(res.status == Status::Optimal);
  CHECK(res.objective == doctest::Approx(3.0));
}

TEST_CASE("unbounded problems are detected") {
  MatrixXd A(1, 2);
  A << 1, -1;  // x0 - x1 = 0, maximize x0
  VectorXd b(1), c(2);
  b << 0;
  c << 1, 0;
  const auto res = gmn::lp::solve_standard_form(A, b, c);
  CHECK(res.status == Status::Unbounded);
}

TEST_CASE("infeasible systems yield a checkable Farkas certificate") {
  // x0 + x1 = 1 and x0 + x1 = 2 cannot both hold.
  MatrixXd A(2, 2);
  A << 1, 1,
       1, 1;
  VectorXd b(2), c(2);
  b << 1, 2;
  c << 0, 0;
  const auto res = gmn::lp::solve_standard_form(A, b, c);
  REQUIRE(res.status == Status::Infeasible);
  CHECK(res.infeasibility > 1e-9);
  const VectorXd y = res.farkas;
  for (int j = 0; j < A.cols(); ++j) CHECK(y.dot(A.col(j)) <= 1e-9);
  CHECK(y.dot(b) > 1e-9);
}

TEST_CASE("random feasible systems are recovered") {
  std::mt19937_64 rng(11);
  std::uniform_real_distribution<double> unif(0.0, 1.0);
  for (int trial = 0; trial < 25; ++trial) {
    const int m = 6, n = 12;
    MatrixXd A(m, n);
    for (int i = 0; i < m; ++i)
      for (int j = 0; j < n; ++j) A(i, j) = unif(rng);
    VectorXd x_true = VectorXd::Zero(n);
    for (int j = 0; j < n; ++j)
      if (unif(rng) < 0.4) x_true(j) = unif(rng);
    const VectorXd b = A * x_true;
    const auto res =
        gmn::lp::solve_standard_form(A, b, VectorXd::Zero(n));
    REQUIRE(res.status == Status::Optimal);
    CHECK((A * res.x - b).cwiseAbs().maxCoeff() < 1e-8);
    CHECK(res.x.minCoeff() >= -1e-12);
  }
}

TEST_CASE("farkas certificates hold on random infeasible instances") {
  std::mt19937_64 rng(12);
  std::uniform_real_distribution<double> unif(0.0, 1.0);
  int infeasible_seen = 0;
  for (int trial = 0; trial < 40; ++trial) {
    // Convex-combination membership of a random target outside the hull of
    // a handful of random points: usually infeasible in high dimension.
    const int dim = 8, cols = 4;
    MatrixXd pts(dim, cols);
    for (int i = 0; i < dim; ++i)
      for (int j = 0; j < cols; ++j) pts(i, j) = unif(rng);
    MatrixXd A(dim + 1, cols);
    A.topRows(dim) = pts;
    A.bottomRows(1).setOnes();
    VectorXd b(dim + 1);
    for (int i = 0; i < dim; ++i) b(i) = unif(rng);
    b(dim) = 1.0;
    const auto res =
        gmn::lp::solve_standard_form(A, b, VectorXd::Zero(cols));
    if (res.status == Status::Infeasible) {
      ++infeasible_seen;
      for (int j = 0; j < cols; ++j)
        CHECK(res.farkas.dot(A.col(j)) <= 1e-9);
      CHECK(res.farkas.dot(b) > 1e-9);
    }
  }
  CHECK(infeasible_seen > 10);
}
