#pragma once

#include <Eigen/Dense>
#include <string>
#include <vector>

#include "gmn/state.hpp"

namespace gmn {

/// Nonempty proper subset of party indices; the complement is side B.
struct Bipartition {
  std::vector<int> side_a;
};

struct MonotoneRow {
  std::string state_name;
  double concurrence = 0.0;
  double negativity = 0.0;
  double log_negativity = 0.0;
  double entanglement_entropy = 0.0;
  double renyi_entropy = 0.0;
};

/// Partial trace over side B; Hermitian, unit trace, PSD.
Eigen::MatrixXcd reduced_density(const StateVector& state,
                                 const Bipartition& split);

/// √(2(1 − Tr ρ_A²)) for pure inputs.
double concurrence_pure(const StateVector& state, const Bipartition& split);

/// (‖ρ^{T_B}‖₁ − 1)/2 and log₂‖ρ^{T_B}‖₁ with the partial transpose taken
/// literally on the projector |ψ⟩⟨ψ|.
double negativity(const StateVector& state, const Bipartition& split);
double log_negativity(const StateVector& state, const Bipartition& split);

/// Von Neumann entropy of ρ_A in bits, and Rényi-q = log₂(Tr ρ_A^q)/(1−q).
double entanglement_entropy(const StateVector& state, const Bipartition& split);
double renyi_entropy(const StateVector& state, const Bipartition& split,
                     double order);

// The published tables round Rényi entropies that only order 1/2 reproduces.
inline constexpr double kDefaultRenyiOrder = 0.5;

std::vector<MonotoneRow> monotone_table(
    const std::vector<std::pair<std::string, StateVector>>& states,
    const Bipartition& split, double renyi_order = kDefaultRenyiOrder);

}  // namespace gmn
