#include "gmn/correlations.hpp"

#include <algorithm>
#include <cmath>
#include <sstream>
#include <stdexcept>

namespace gmn {

namespace {

constexpr double kClampTol = 1e-12;
constexpr double kRowSumTol = 1e-10;

// Applies the conjugate-transposed basis to one party's tensor leg, i.e.
// rotates amplitudes into that party's measurement eigenbasis.
void rotate_party(Eigen::VectorXcd& amps, int num_parties, int party,
                  const Eigen::Matrix2cd& basis) {
  const Eigen::Index stride = Eigen::Index{1} << (num_parties - 1 - party);
  const Eigen::Matrix2cd bra = basis.adjoint();
  for (Eigen::Index base = 0; base < amps.size(); ++base) {
    if (base & stride) continue;
    const std::complex<double> a0 = amps(base);
    const std::complex<double> a1 = amps(base + stride);
    amps(base) = bra(0, 0) * a0 + bra(0, 1) * a1;
    amps(base + stride) = bra(1, 0) * a0 + bra(1, 1) * a1;
  }
}

}  // namespace

Eigen::Index CorrelationTensor::setting_index(
    const std::vector<int>& settings) const {
  if (static_cast<int>(settings.size()) != num_parties)
    throw std::invalid_argument("tensor: one setting per party expected");
  Eigen::Index idx = 0;
  for (int s : settings) {
    if (s != 0 && s != 1) throw std::invalid_argument("tensor: settings are 0/1");
    idx = idx * 2 + s;
  }
  return idx;
}

Eigen::Index CorrelationTensor::outcome_index(
    const std::vector<int>& outcomes) const {
  if (static_cast<int>(outcomes.size()) != num_parties)
    throw std::invalid_argument("tensor: one outcome per party expected");
  Eigen::Index idx = 0;
  for (int i = 0; i < num_parties; ++i) {
    if (outcomes[i] < 0 || outcomes[i] >= outcomes_per_party[i])
      throw std::invalid_argument("tensor: outcome out of range");
    idx = idx * outcomes_per_party[i] + outcomes[i];
  }
  return idx;
}

CorrelationTensor correlation_tensor(const StateVector& state,
                                     const std::vector<MeasurementBasis>& bases) {
  const int n = state.num_parties;
  if (static_cast<int>(bases.size()) != n)
    throw std::invalid_argument("correlation_tensor: one basis per party");
  for (int d : state.local_dims)
    if (d != 2)
      throw std::invalid_argument("correlation_tensor: state must be qubit-local");
  if (state.dim() != (Eigen::Index{1} << n))
    throw std::invalid_argument("correlation_tensor: dimension mismatch");

  CorrelationTensor tensor;
  tensor.num_parties = n;
  tensor.outcomes_per_party.assign(n, 2);
  const Eigen::Index rows = Eigen::Index{1} << n;
  const Eigen::Index cols = Eigen::Index{1} << n;
  tensor.probabilities.resize(rows, cols);

  for (Eigen::Index s = 0; s < rows; ++s) {
    Eigen::VectorXcd rotated = state.amplitudes;
    for (int party = 0; party < n; ++party) {
      const int setting = static_cast<int>((s >> (n - 1 - party)) & 1);
      rotate_party(rotated, n, party, bases[party].setting_basis(setting));
    }
    tensor.probabilities.row(s) = rotated.cwiseAbs2().transpose();
  }
  return make_tensor(n, tensor.outcomes_per_party, std::move(tensor.probabilities));
}

CorrelationTensor make_tensor(int num_parties,
                              std::vector<int> outcomes_per_party,
                              Eigen::MatrixXd probabilities) {
  if (num_parties < 2) throw std::invalid_argument("tensor: num_parties >= 2");
  if (static_cast<int>(outcomes_per_party.size()) != num_parties)
    throw std::invalid_argument("tensor: outcome count per party expected");
  Eigen::Index cols = 1;
  for (int d : outcomes_per_party) {
    if (d < 2) throw std::invalid_argument("tensor: outcomes per party >= 2");
    cols *= d;
  }
  if (probabilities.rows() != (Eigen::Index{1} << num_parties) ||
      probabilities.cols() != cols)
    throw std::invalid_argument("tensor: probability array has wrong shape");

  for (Eigen::Index r = 0; r < probabilities.rows(); ++r) {
    for (Eigen::Index c = 0; c < probabilities.cols(); ++c) {
      double& p = probabilities(r, c);
      if (p < -kClampTol || p > 1.0 + kClampTol)
        throw std::logic_error(
            "tensor: probability outside [0,1] beyond round-off");
      p = std::clamp(p, 0.0, 1.0);
    }
    const double sum = probabilities.row(r).sum();
    if (std::abs(sum - 1.0) > kRowSumTol)
      throw std::logic_error("tensor: outcome probabilities do not sum to 1");
  }

  CorrelationTensor tensor;
  tensor.num_parties = num_parties;
  tensor.outcomes_per_party = std::move(outcomes_per_party);
  tensor.probabilities = std::move(probabilities);
  return tensor;
}

Eigen::VectorXd marginal(const CorrelationTensor& tensor,
                         const std::vector<int>& parties,
                         const std::vector<int>& settings,
                         const std::vector<std::pair<int, int>>& context) {
  const int n = tensor.num_parties;
  if (parties.empty()) throw std::invalid_argument("marginal: empty subset");
  if (parties.size() != settings.size())
    throw std::invalid_argument("marginal: one setting per subset party");
  if (!std::is_sorted(parties.begin(), parties.end()) ||
      std::adjacent_find(parties.begin(), parties.end()) != parties.end())
    throw std::invalid_argument("marginal: subset must be ascending and unique");

  std::vector<int> full_settings(n, -1);
  for (size_t i = 0; i < parties.size(); ++i) {
    if (parties[i] < 0 || parties[i] >= n)
      throw std::invalid_argument("marginal: party index out of range");
    full_settings[parties[i]] = settings[i];
  }
  for (const auto& [party, setting] : context) {
    if (party < 0 || party >= n)
      throw std::invalid_argument("marginal: context party out of range");
    if (full_settings[party] != -1)
      throw std::invalid_argument(
          "marginal: context overlaps the subset or repeats a party");
    full_settings[party] = setting;
  }
  for (int s : full_settings)
    if (s == -1)
      throw std::invalid_argument("marginal: missing context for some party");

  const Eigen::Index row = tensor.setting_index(full_settings);

  Eigen::Index out_dim = 1;
  for (int p : parties) out_dim *= tensor.outcomes_per_party[p];
  Eigen::VectorXd result = Eigen::VectorXd::Zero(out_dim);

  std::vector<char> in_subset(n, 0);
  for (int p : parties) in_subset[p] = 1;

  for (Eigen::Index col = 0; col < tensor.num_outcomes(); ++col) {
    // Decode the outcome string, then re-encode the subset digits.
    Eigen::Index rest = col;
    std::vector<int> digits(n);
    for (int i = n - 1; i >= 0; --i) {
      digits[i] = static_cast<int>(rest % tensor.outcomes_per_party[i]);
      rest /= tensor.outcomes_per_party[i];
    }
    Eigen::Index sub = 0;
    for (int p : parties) sub = sub * tensor.outcomes_per_party[p] + digits[p];
    result(sub) += tensor.probabilities(row, col);
  }
  return result;
}

NoSignalingReport check_no_signaling(const CorrelationTensor& tensor,
                                     double tol) {
  const int n = tensor.num_parties;
  NoSignalingReport report;

  for (int mask = 1; mask < (1 << n) - 1; ++mask) {
    std::vector<int> subset, complement;
    for (int p = 0; p < n; ++p)
      ((mask >> p) & 1 ? subset : complement).push_back(p);

    const int sub_settings = 1 << subset.size();
    const int ctx_settings = 1 << complement.size();
    for (int ss = 0; ss < sub_settings; ++ss) {
      std::vector<int> settings(subset.size());
      for (size_t i = 0; i < subset.size(); ++i)
        settings[i] = (ss >> (subset.size() - 1 - i)) & 1;

      std::vector<Eigen::VectorXd> marginals(ctx_settings);
      for (int cs = 0; cs < ctx_settings; ++cs) {
        std::vector<std::pair<int, int>> context;
        for (size_t i = 0; i < complement.size(); ++i)
          context.emplace_back(complement[i],
                               (cs >> (complement.size() - 1 - i)) & 1);
        marginals[cs] = marginal(tensor, subset, settings, context);
      }
      for (int a = 0; a < ctx_settings; ++a) {
        for (int b = a + 1; b < ctx_settings; ++b) {
          const double v = (marginals[a] - marginals[b]).cwiseAbs().maxCoeff();
          if (v > report.max_violation) {
            report.max_violation = v;
            if (v > tol) {
              std::ostringstream os;
              os << "subset={";
              for (size_t i = 0; i < subset.size(); ++i)
                os << (i ? "," : "") << subset[i];
              os << "} settings=" << ss << " contexts=(" << a << "," << b << ")";
              report.worst_case = os.str();
            }
          }
        }
      }
    }
  }
  return report;
}

CorrelationTensor uniform_tensor(int num_parties, int outcomes_per_party) {
  Eigen::Index cols = 1;
  for (int i = 0; i < num_parties; ++i) cols *= outcomes_per_party;
  Eigen::MatrixXd probs = Eigen::MatrixXd::Constant(
      Eigen::Index{1} << num_parties, cols, 1.0 / static_cast<double>(cols));
  return make_tensor(num_parties,
                     std::vector<int>(num_parties, outcomes_per_party),
                     std::move(probs));
}

}  // namespace gmn
