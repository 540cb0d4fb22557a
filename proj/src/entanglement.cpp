#include "gmn/entanglement.hpp"

#include <algorithm>
#include <cmath>
#include <stdexcept>

namespace gmn {

namespace {

void check_split(const StateVector& state, const Bipartition& split) {
  if (split.side_a.empty() ||
      static_cast<int>(split.side_a.size()) >= state.num_parties)
    throw std::invalid_argument("bipartition: side A must be a nonempty proper subset");
  std::vector<int> sorted = split.side_a;
  std::sort(sorted.begin(), sorted.end());
  if (std::adjacent_find(sorted.begin(), sorted.end()) != sorted.end())
    throw std::invalid_argument("bipartition: repeated party index");
  if (sorted.front() < 0 || sorted.back() >= state.num_parties)
    throw std::invalid_argument("bipartition: party index out of range");
}

// Amplitudes as a (dim A) x (dim B) matrix, side-A parties becoming the
// row index in ascending order.
Eigen::MatrixXcd amplitude_matrix(const StateVector& state,
                                  const Bipartition& split) {
  check_split(state, split);
  const int n = state.num_parties;
  std::vector<char> in_a(n, 0);
  for (int p : split.side_a) in_a[p] = 1;

  Eigen::Index dim_a = 1, dim_b = 1;
  for (int p = 0; p < n; ++p)
    (in_a[p] ? dim_a : dim_b) *= state.local_dims[p];

  Eigen::MatrixXcd m(dim_a, dim_b);
  std::vector<int> digits(n);
  for (Eigen::Index idx = 0; idx < state.dim(); ++idx) {
    Eigen::Index rest = idx;
    for (int p = n - 1; p >= 0; --p) {
      digits[p] = static_cast<int>(rest % state.local_dims[p]);
      rest /= state.local_dims[p];
    }
    Eigen::Index row = 0, col = 0;
    for (int p = 0; p < n; ++p) {
      if (in_a[p])
        row = row * state.local_dims[p] + digits[p];
      else
        col = col * state.local_dims[p] + digits[p];
    }
    m(row, col) = state.amplitudes(idx);
  }
  return m;
}

Eigen::VectorXd schmidt_weights(const StateVector& state,
                                const Bipartition& split) {
  const Eigen::MatrixXcd m = amplitude_matrix(state, split);
  Eigen::JacobiSVD<Eigen::MatrixXcd> svd(m);
  return svd.singularValues().cwiseAbs2();
}

double ptranspose_trace_norm(const StateVector& state,
                             const Bipartition& split) {
  const Eigen::MatrixXcd m = amplitude_matrix(state, split);
  const Eigen::Index da = m.rows(), db = m.cols();
  Eigen::MatrixXcd rho = Eigen::MatrixXcd::Zero(da * db, da * db);
  for (Eigen::Index ia = 0; ia < da; ++ia)
    for (Eigen::Index ib = 0; ib < db; ++ib)
      for (Eigen::Index ja = 0; ja < da; ++ja)
        for (Eigen::Index jb = 0; jb < db; ++jb)
          // ρ^{T_B}[(ia,ib),(ja,jb)] = ρ[(ia,jb),(ja,ib)]
          rho(ia * db + ib, ja * db + jb) =
              m(ia, jb) * std::conj(m(ja, ib));
  Eigen::SelfAdjointEigenSolver<Eigen::MatrixXcd> es(rho,
                                                     Eigen::EigenvaluesOnly);
  return es.eigenvalues().cwiseAbs().sum();
}

}  // namespace

Eigen::MatrixXcd reduced_density(const StateVector& state,
                                 const Bipartition& split) {
  const Eigen::MatrixXcd m = amplitude_matrix(state, split);
  return m * m.adjoint();
}

double concurrence_pure(const StateVector& state, const Bipartition& split) {
  const Eigen::VectorXd lam = schmidt_weights(state, split);
  const double purity = lam.cwiseAbs2().sum();
  return std::sqrt(std::max(2.0 * (1.0 - purity), 0.0));
}

double negativity(const StateVector& state, const Bipartition& split) {
  return 0.5 * (ptranspose_trace_norm(state, split) - 1.0);
}

double log_negativity(const StateVector& state, const Bipartition& split) {
  return std::log2(ptranspose_trace_norm(state, split));
}

double entanglement_entropy(const StateVector& state,
                            const Bipartition& split) {
  const Eigen::VectorXd lam = schmidt_weights(state, split);
  double h = 0.0;
  for (Eigen::Index i = 0; i < lam.size(); ++i)
    if (lam(i) > 1e-14) h -= lam(i) * std::log2(lam(i));
  return h;
}

double renyi_entropy(const StateVector& state, const Bipartition& split,
                     double order) {
  if (!(order > 0.0) || order == 1.0)
    throw std::invalid_argument("renyi_entropy: order must be > 0 and != 1");
  const Eigen::VectorXd lam = schmidt_weights(state, split);
  double sum = 0.0;
  for (Eigen::Index i = 0; i < lam.size(); ++i)
    if (lam(i) > 1e-14) sum += std::pow(lam(i), order);
  return std::log2(sum) / (1.0 - order);
}

std::vector<MonotoneRow> monotone_table(
    const std::vector<std::pair<std::string, StateVector>>& states,
    const Bipartition& split, double renyi_order) {
  std::vector<MonotoneRow> rows;
  rows.reserve(states.size());
  for (const auto& [name, state] : states) {
    MonotoneRow row;
    row.state_name = name;
    row.concurrence = concurrence_pure(state, split);
    row.negativity = negativity(state, split);
    row.log_negativity = log_negativity(state, split);
    row.entanglement_entropy = entanglement_entropy(state, split);
    row.renyi_entropy = renyi_entropy(state, split, renyi_order);
    rows.push_back(std::move(row));
  }
  return rows;
}

}  // namespace gmn
