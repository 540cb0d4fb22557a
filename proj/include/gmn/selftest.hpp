#pragma once

#include <Eigen/Dense>
#include <vector>

#include "gmn/correlations.hpp"
#include "gmn/state.hpp"

namespace gmn {

/// N-party pure state whose per-party spaces split into 2-dimensional
/// blocks: basis kets |2b⟩, |2b+1⟩ play the roles of |0⟩, |1⟩ inside
/// block b. Setting-0 measurements project onto even/odd kets.
struct BlockState {
  int num_parties = 0;
  int num_blocks = 0;  // per-party local dimension = 2*num_blocks
  Eigen::VectorXcd amplitudes;

  int local_dim() const { return 2 * num_blocks; }
};

/// Direct sum ⊕_b √w_b · (block_state placed in block b of every party).
BlockState embed_blocks(const Eigen::VectorXd& block_weights,
                        const StateVector& block_state);

/// Per-party weights of the diagonal blocks (‖ sub-block b ‖²).
Eigen::VectorXd block_weights(const BlockState& chi);

struct SwapExtraction {
  StateVector junk;       // over the original block spaces
  StateVector extracted;  // N fresh qubits
  double factorization_residual = 0.0;
};

/// Applies the same local isometry to every party — ancilla |0⟩,
/// |2m,0⟩ → |2m,0⟩ and |2m+1,0⟩ → |2m,1⟩ — then factors the output across
/// the system/ancilla cut by best rank-one (SVD) approximation. Throws when
/// the residual exceeds `tol`: the input was not block-diagonal with a
/// common two-level payload.
SwapExtraction swap_isometry(const BlockState& chi, double tol = 1e-8);

/// Born tensor of a block state under block-diagonal binary measurements:
/// setting 0 distinguishes even from odd kets, setting 1 applies the
/// (alpha, phi) rotation inside every block.
CorrelationTensor block_correlation_tensor(
    const BlockState& chi, const std::vector<MeasurementBasis>& bases);

struct CertificationReport {
  double score = 0.0;
  double residual_max = 0.0;
  double extraction_fidelity = 0.0;
  double factorization_residual = 0.0;
  bool score_ok = false;
  bool residuals_ok = false;
  bool fidelity_ok = false;
  bool pass = false;
  double tol = 0.0;
};

/// Passes iff score(tensor) ≥ optimal − tol, all residuals ≤ tol, and the
/// swap extraction reproduces the ideal N-party state with fidelity
/// ≥ 1 − tol. N ∈ {3, 4} (the party counts with a pinned optimum).
CertificationReport certify(const CorrelationTensor& tensor,
                            const BlockState& chi, double tol);

}  // namespace gmn
