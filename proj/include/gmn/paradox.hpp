#pragma once

#include <Eigen/Dense>
#include <string>
#include <vector>

#include "gmn/correlations.hpp"

namespace gmn {

/// Residuals of the cyclic zero-probability constraints together with the
/// score S_N = p_N − q_N.
struct ParadoxReport {
  std::vector<std::pair<std::string, double>> residuals;
  double p_n = 0.0;
  double q_n = 0.0;
  double score = 0.0;
  double epsilon = 0.0;

  double residual_max() const;
};

/// Convex-decomposition certificate (feasible) or separating functional
/// with achieved gap (infeasible) for polytope membership.
struct LPCertificate {
  bool feasible = false;
  Eigen::VectorXd weights;
  Eigen::VectorXd separating_functional;
  double gap = 0.0;
  double tolerance = 0.0;
};

/// Vertices of the bipartite 2-setting/2-outcome no-signaling polytope,
/// each a 4x4 matrix with row = setting pair (2x+y) and column = outcome
/// pair (2a+b). Deterministic vertices come first.
struct NSPolytopeVertexSet {
  std::vector<Eigen::Matrix4d> vertices;
  int num_deterministic = 0;
};

enum class ResidualContexts { AllZero, Strict /* max over all contexts */ };

/// Evaluates the cyclic pair constraints: party i at setting 1 yielding any
/// outcome except its last, party i+1 (cyclic) at setting 0 yielding its
/// first outcome, for i = 0..N-1. Works for arbitrary outcome counts.
ParadoxReport constraint_residuals(
    const CorrelationTensor& tensor,
    ResidualContexts contexts = ResidualContexts::AllZero);

/// p_N = P(all first outcomes | all settings 0),
/// q_N = P(all last outcomes  | all settings 1); residuals included.
ParadoxReport score(const CorrelationTensor& tensor,
                    ResidualContexts contexts = ResidualContexts::AllZero);

/// Maximum of the score over the tripartite local polytope subject to every
/// residual ≤ epsilon, solved as an LP over the 64 deterministic strategies.
double local_max_lp(int num_parties, double epsilon);

NSPolytopeVertexSet ns_polytope_vertices();

/// LP membership in the fully-local polytope (deterministic strategies).
LPCertificate membership_local(const CorrelationTensor& tensor, double tol = 1e-9);

/// LP membership in the tripartite hybrid polytope: mixtures over all three
/// bipartitions of (bipartite NS vertex) × (deterministic strategy for the
/// remaining party). Infeasibility certifies genuine tripartite nonlocality.
LPCertificate membership_hybrid(const CorrelationTensor& tensor, double tol = 1e-9);

// Dual gap below which infeasibility is never declared.
inline constexpr double kDualGapThreshold = 1e-7;

}  // namespace gmn
