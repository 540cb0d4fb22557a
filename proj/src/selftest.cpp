#include "gmn/selftest.hpp"

#include <cmath>
#include <limits>
#include <stdexcept>

#include "gmn/paradox.hpp"

namespace gmn {

namespace {

// Mixed-radix index helpers over N parties of equal dimension d.
Eigen::Index pack(const std::vector<int>& digits, int d) {
  Eigen::Index idx = 0;
  for (int v : digits) idx = idx * d + v;
  return idx;
}

void unpack(Eigen::Index idx, int d, std::vector<int>& digits) {
  for (int i = static_cast<int>(digits.size()) - 1; i >= 0; --i) {
    digits[i] = static_cast<int>(idx % d);
    idx /= d;
  }
}

}  // namespace

BlockState embed_blocks(const Eigen::VectorXd& weights,
                        const StateVector& block_state) {
  if (weights.size() < 1)
    throw std::invalid_argument("embed_blocks: need at least one weight");
  if (weights.minCoeff() < 0.0 || std::abs(weights.sum() - 1.0) > 1e-10)
    throw std::invalid_argument(
        "embed_blocks: weights must be nonnegative and sum to 1");
  for (int d : block_state.local_dims)
    if (d != 2)
      throw std::invalid_argument("embed_blocks: block state must be N-qubit");

  const int n = block_state.num_parties;
  const int blocks = static_cast<int>(weights.size());
  const int local = 2 * blocks;
  Eigen::Index dim = 1;
  for (int i = 0; i < n; ++i) dim *= local;

  BlockState chi;
  chi.num_parties = n;
  chi.num_blocks = blocks;
  chi.amplitudes = Eigen::VectorXcd::Zero(dim);

  std::vector<int> digits(n);
  for (int b = 0; b < blocks; ++b) {
    const double root = std::sqrt(weights(b));
    for (Eigen::Index q = 0; q < block_state.dim(); ++q) {
      for (int i = 0; i < n; ++i)
        digits[i] = 2 * b + static_cast<int>((q >> (n - 1 - i)) & 1);
      chi.amplitudes(pack(digits, local)) += root * block_state.amplitudes(q);
    }
  }
  return chi;
}

Eigen::VectorXd block_weights(const BlockState& chi) {
  const int n = chi.num_parties;
  const int local = chi.local_dim();
  Eigen::VectorXd w = Eigen::VectorXd::Zero(chi.num_blocks);
  std::vector<int> digits(n);
  for (Eigen::Index idx = 0; idx < chi.amplitudes.size(); ++idx) {
    unpack(idx, local, digits);
    const int b = digits[0] / 2;
    bool diagonal = true;
    for (int i = 1; i < n; ++i) diagonal = diagonal && digits[i] / 2 == b;
    if (diagonal) w(b) += std::norm(chi.amplitudes(idx));
  }
  return w;
}

SwapExtraction swap_isometry(const BlockState& chi, double tol) {
  const int n = chi.num_parties;
  const int local = chi.local_dim();
  if (local % 2 != 0 || local < 2)
    throw std::invalid_argument("swap_isometry: even local dimension required");

  // Output amplitude matrix over (system kets) x (ancilla kets): the basis
  // ket |d_1..d_N⟩ maps to system |2⌊d_1/2⌋..⟩ and ancilla |parity(d_1)..⟩.
  const Eigen::Index sys_dim = chi.amplitudes.size();
  const Eigen::Index anc_dim = Eigen::Index{1} << n;
  Eigen::MatrixXcd output = Eigen::MatrixXcd::Zero(sys_dim, anc_dim);

  std::vector<int> digits(n), even(n);
  for (Eigen::Index idx = 0; idx < sys_dim; ++idx) {
    unpack(idx, local, digits);
    Eigen::Index anc = 0;
    for (int i = 0; i < n; ++i) {
      even[i] = digits[i] - digits[i] % 2;
      anc = anc * 2 + digits[i] % 2;
    }
    output(pack(even, local), anc) += chi.amplitudes(idx);
  }

  Eigen::JacobiSVD<Eigen::MatrixXcd> svd(
      output, Eigen::ComputeThinU | Eigen::ComputeThinV);
  const double sigma1 = svd.singularValues()(0);
  const double total = svd.singularValues().squaredNorm();
  const double residual =
      std::sqrt(std::max(total - sigma1 * sigma1, 0.0));

  SwapExtraction ext;
  ext.factorization_residual = residual;
  if (residual > tol)
    throw std::runtime_error(
        "swap_isometry: output does not factor into junk ⊗ extracted "
        "(residual " + std::to_string(residual) + ")");

  Eigen::VectorXcd junk = svd.matrixU().col(0);
  Eigen::VectorXcd extracted = svd.matrixV().col(0).conjugate();

  // Deterministic phase: make the extracted state's largest amplitude
  // real-positive and push the compensating phase into the junk factor.
  Eigen::Index imax = 0;
  extracted.cwiseAbs().maxCoeff(&imax);
  const std::complex<double> ph =
      extracted(imax) / std::abs(extracted(imax));
  extracted /= ph;
  junk *= ph;

  ext.junk.num_parties = n;
  ext.junk.local_dims.assign(n, local);
  ext.junk.amplitudes = junk;
  ext.extracted.num_parties = n;
  ext.extracted.local_dims.assign(n, 2);
  ext.extracted.amplitudes = extracted;
  return ext;
}

CorrelationTensor block_correlation_tensor(
    const BlockState& chi, const std::vector<MeasurementBasis>& bases) {
  const int n = chi.num_parties;
  if (static_cast<int>(bases.size()) != n)
    throw std::invalid_argument("block tensor: one basis per party");
  const int local = chi.local_dim();

  // Per-party projector rows: outcome o of setting s projects onto the
  // direct sum over blocks of the qubit basis bra.
  const auto project = [&](const Eigen::VectorXcd& amps, int party, int setting,
                           int outcome) {
    const Eigen::Matrix2cd basis = bases[party].setting_basis(setting);
    Eigen::VectorXcd result = Eigen::VectorXcd::Zero(amps.size());
    std::vector<int> digits(n);
    for (Eigen::Index idx = 0; idx < amps.size(); ++idx) {
      if (amps(idx) == std::complex<double>(0.0, 0.0)) continue;
      unpack(idx, local, digits);
      const int d = digits[party];
      const int within = d % 2;
      // ⟨outcome| acting on the within-block qubit component.
      const std::complex<double> coeff = std::conj(basis(within, outcome));
      if (coeff == std::complex<double>(0.0, 0.0)) continue;
      std::vector<int> target = digits;
      target[party] = d - within;  // collapse onto the block's even ket
      result(pack(target, local)) += coeff * amps(idx);
    }
    return result;
  };

  CorrelationTensor tensor;
  tensor.num_parties = n;
  tensor.outcomes_per_party.assign(n, 2);
  const Eigen::Index rows = Eigen::Index{1} << n;
  const Eigen::Index cols = Eigen::Index{1} << n;
  Eigen::MatrixXd probs(rows, cols);

  for (Eigen::Index s = 0; s < rows; ++s) {
    for (Eigen::Index x = 0; x < cols; ++x) {
      Eigen::VectorXcd cur = chi.amplitudes;
      for (int party = 0; party < n; ++party) {
        const int setting = static_cast<int>((s >> (n - 1 - party)) & 1);
        const int outcome = static_cast<int>((x >> (n - 1 - party)) & 1);
        cur = project(cur, party, setting, outcome);
      }
      probs(s, x) = cur.squaredNorm();
    }
  }
  return make_tensor(n, tensor.outcomes_per_party, std::move(probs));
}

CertificationReport certify(const CorrelationTensor& tensor,
                            const BlockState& chi, double tol) {
  const int n = chi.num_parties;
  double target_score = 0.0;
  StateVector target;
  if (n == 3) {
    target_score = kOptimalScore3;
    target = build_named_state(NamedState::PSI_STAR_3);
  } else if (n == 4) {
    target_score = kOptimalScore4;
    target = build_named_state(NamedState::PSI_STAR_4);
  } else {
    throw std::invalid_argument("certify: N = 3 or 4 supported");
  }

  CertificationReport report;
  report.tol = tol;

  const ParadoxReport paradox = score(tensor);
  report.score = paradox.score;
  report.residual_max = paradox.residual_max();
  report.score_ok = report.score >= target_score - tol;
  report.residuals_ok = report.residual_max <= tol;

  // Infinite tolerance: keep the best rank-one extraction even when the
  // output does not factor; a poor factorization shows up as low fidelity.
  const SwapExtraction ext =
      swap_isometry(chi, std::numeric_limits<double>::infinity());
  report.factorization_residual = ext.factorization_residual;
  report.extraction_fidelity = std::norm(inner_product(ext.extracted, target));
  report.fidelity_ok = report.extraction_fidelity >= 1.0 - tol &&
                       report.factorization_residual <= 1e-6;
  report.pass = report.score_ok && report.residuals_ok && report.fidelity_ok;
  return report;
}

}  // namespace gmn
