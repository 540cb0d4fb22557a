#pragma once

#include <Eigen/Dense>
#include <complex>
#include <string>
#include <vector>

namespace gmn {

/// Pure state over an N-party tensor-product basis. Amplitudes are stored
/// lexicographically with party 0 most significant.
struct StateVector {
  int num_parties = 0;
  std::vector<int> local_dims;
  Eigen::VectorXcd amplitudes;

  Eigen::Index dim() const { return amplitudes.size(); }
};

/// One party's binary projective measurement. Setting 0 is always the
/// computational basis; setting 1 is the (alpha, phi) rotated basis
///   |+⟩ = cos(α/2)|0⟩ + e^{iφ} sin(α/2)|1⟩,
///   |−⟩ = −sin(α/2)|0⟩ + e^{iφ} cos(α/2)|1⟩.
struct MeasurementBasis {
  double alpha = 0.0;
  double phi = 0.0;

  /// Columns are the basis kets of the given setting (outcome 0, outcome 1).
  Eigen::Matrix2cd setting_basis(int setting) const;
};

/// Parameters of the closed-form state family solving the zero-probability
/// constraints: weight-k basis strings carry a·(−1)^k·e^{iΣφ}·Πcot(α_i/2),
/// the all-ones string carries e^{iδ}·√(radicand).
struct ConstrainedFamilyParams {
  int num_parties = 0;
  double a = 0.0;
  double delta = 0.0;
  Eigen::VectorXd alphas;
  Eigen::VectorXd phis;
};

enum class NamedState { GHZ3, W3, GHZ4, W4, PSI_STAR_3, PSI_STAR_4 };

// Optimum of the tripartite score within the constrained family,
// a = ½√((316−17√158)/1106) in closed form.
double optimal_a3();
inline constexpr double kOptimalScore3 = 0.020350181784876240;

// Four-party optimum, persisted from a converged maximize_constrained(4)
// run (cross-checked by grid search); the relative phase of the all-ones
// amplitude is π for even party count.
inline constexpr double kOptimalA4 = 0.06882081843784839;
inline constexpr double kOptimalAlpha4 = 1.5705954613419457;
inline constexpr double kOptimalScore4 = 0.004443134731225058;

MeasurementBasis build_measurement_basis(double alpha, double phi);

/// Feasibility: 1 − a²·[Π(1+cot²(α_i/2)) − Πcot²(α_i/2)] must be ≥ −1e-12.
double constrained_radicand(const ConstrainedFamilyParams& params);

StateVector build_constrained_state(const ConstrainedFamilyParams& params);

StateVector build_named_state(NamedState name);
StateVector build_named_state(const std::string& name);
std::string to_string(NamedState name);

/// Parameters reproducing PSI_STAR_3 / PSI_STAR_4.
ConstrainedFamilyParams optimal_family_params(int num_parties);

std::complex<double> inner_product(const StateVector& a, const StateVector& b);

/// Validates dims/normalization (1e-12) and returns the state.
StateVector make_state(int num_parties, std::vector<int> local_dims,
                       Eigen::VectorXcd amplitudes);

}  // namespace gmn
