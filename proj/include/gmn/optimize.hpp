#pragma once

#include <Eigen/Dense>
#include <cstdint>
#include <functional>
#include <optional>
#include <vector>

#include "gmn/state.hpp"

namespace gmn {

/// Score of the constrained family evaluated in closed form (phases enter
/// only through the relative phase delta − Σφ of the all-ones amplitude).
double constrained_score(const ConstrainedFamilyParams& params);

/// Gradient of constrained_score with respect to (a, alpha_1, …, alpha_N).
Eigen::VectorXd constrained_score_gradient(const ConstrainedFamilyParams& params);

struct GeneralQubitSolution {
  Eigen::VectorXcd amplitudes;
  Eigen::VectorXd alphas;
};

struct OptimizationResult {
  int num_parties = 0;
  double best_score = 0.0;
  double residual_max = 0.0;
  int restarts = 0;
  bool converged = false;
  std::uint64_t seed = 0;
  std::optional<ConstrainedFamilyParams> family;
  std::optional<GeneralQubitSolution> general;
};

struct MaximizeOptions {
  int restarts = 64;
  std::uint64_t seed = 0;
  int max_iterations = 400;
  int threads = 0;  // 0: GMN_THREADS env var, then hardware concurrency
  bool freeze_a = false;
  /// Fixes the measurement angles instead of optimizing them.
  std::optional<Eigen::VectorXd> fixed_alphas;
  /// Overrides the escalating penalty schedule with a single fixed weight
  /// (general-qubit path only).
  std::optional<double> penalty_override;
};

/// Maximizes the score over (a, alphas) of the closed-form family, phases
/// gauge-fixed to zero and the all-ones relative phase set by party parity.
/// Residuals vanish by construction.
OptimizationResult maximize_constrained(int num_parties,
                                        const MaximizeOptions& opts = {});

/// Maximizes the score over the full 2^N-dimensional amplitude vector and
/// measurement angles, driving the residuals to ≤ 1e-8 by an escalating
/// quadratic penalty. N = 3 scope.
OptimizationResult maximize_general_qubit(int num_parties,
                                          const MaximizeOptions& opts = {});

struct SweepRecord {
  double epsilon = 0.0;
  double qubit_max = 0.0;
  double local_bound = 0.0;  // 3·epsilon
  double p_eps = 0.0;
  double p_eps_vector = 0.0;  // raw amplitude-difference 1-norm variant
  Eigen::VectorXd ansatz_amplitudes;  // (a_000, a_001, a_011, a_111)
  Eigen::VectorXd alphas;
  bool converged = false;
};

struct SweepOptions {
  std::uint64_t seed = 0;
  int restarts = 16;
  int max_iterations = 300;
  int threads = 0;
};

/// For each epsilon (ascending), maximizes the score over the symmetric
/// 4-amplitude ansatz and angles subject to residuals ≤ epsilon, recording
/// the argmax and its distance to the ideal state. Warm-started from the
/// previous grid point, which makes qubit_max nondecreasing by construction.
std::vector<SweepRecord> noise_sweep(const std::vector<double>& eps_grid,
                                     const SweepOptions& opts = {});

/// Builds the ansatz state (a_000, a_001 ×3, a_011 ×3, a_111), normalized.
StateVector ansatz_state(const Eigen::Vector4d& amplitudes);

/// 0.5‖ρ_A − ρ_B‖₁ for pure states: √(1 − |⟨A|B⟩|²), global phase gauged.
double trace_distance(const StateVector& a, const StateVector& b);

/// Literal 0.5·Σ|a_i − b_i| on the amplitude vectors, no phase gauge.
double vector_one_norm_distance(const StateVector& a, const StateVector& b);

namespace detail {

struct BfgsOptions {
  int max_iterations = 400;
  double grad_tol = 1e-11;
};

struct BfgsOutcome {
  Eigen::VectorXd x;
  double f = 0.0;
  double grad_norm = 0.0;
  int iterations = 0;
  bool converged = false;
};

/// Minimizes f via BFGS with Armijo backtracking. The callable fills the
/// gradient when the pointer is non-null.
BfgsOutcome bfgs_minimize(
    const std::function<double(const Eigen::VectorXd&, Eigen::VectorXd*)>& fn,
    Eigen::VectorXd x0, const BfgsOptions& opts = {});

int resolve_threads(int requested);

}  // namespace detail

}  // namespace gmn
