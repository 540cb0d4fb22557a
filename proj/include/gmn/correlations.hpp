#pragma once

#include <Eigen/Dense>
#include <string>
#include <vector>

#include "gmn/state.hpp"

namespace gmn {

/// Joint conditional distribution P(outcomes | settings) for an N-party
/// scenario with two settings per party. Row = setting string (party 0 most
/// significant bit), column = outcome string (mixed radix, party 0 most
/// significant digit).
struct CorrelationTensor {
  int num_parties = 0;
  std::vector<int> outcomes_per_party;
  Eigen::MatrixXd probabilities;

  Eigen::Index num_settings() const { return probabilities.rows(); }
  Eigen::Index num_outcomes() const { return probabilities.cols(); }

  Eigen::Index setting_index(const std::vector<int>& settings) const;
  Eigen::Index outcome_index(const std::vector<int>& outcomes) const;
};

struct NoSignalingReport {
  double max_violation = 0.0;
  std::string worst_case;
};

/// Born-rule tensor: P(x|s) = |⟨ basis kets for (s, x) | state ⟩|².
CorrelationTensor correlation_tensor(const StateVector& state,
                                     const std::vector<MeasurementBasis>& bases);

/// Marginal distribution over `parties` (ascending indices) measured with
/// `settings`; `context` supplies the setting of every remaining party as
/// (party, setting) pairs. Indexed mixed-radix over the subset outcomes.
Eigen::VectorXd marginal(const CorrelationTensor& tensor,
                         const std::vector<int>& parties,
                         const std::vector<int>& settings,
                         const std::vector<std::pair<int, int>>& context);

NoSignalingReport check_no_signaling(const CorrelationTensor& tensor,
                                     double tol = 1e-12);

/// Uniform distribution for every setting (handy baseline in tests and the
/// CLI verify path).
CorrelationTensor uniform_tensor(int num_parties, int outcomes_per_party = 2);

/// Validates shape, clamps [−1e-12, 0) round-off to 0, checks row sums.
CorrelationTensor make_tensor(int num_parties, std::vector<int> outcomes_per_party,
                              Eigen::MatrixXd probabilities);

}  // namespace gmn
