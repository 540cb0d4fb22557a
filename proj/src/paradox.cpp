#include "gmn/paradox.hpp"

#include <array>
#include <cmath>
#include <sstream>
#include <stdexcept>

#include "gmn/lp.hpp"

namespace gmn {

namespace {

constexpr double kEqualityTol = 1e-9;

std::string party_label(int i) { return "A" + std::to_string(i + 1); }

// All contexts (complement setting assignments) for the pair {i, j}.
std::vector<std::vector<std::pair<int, int>>> pair_contexts(
    int n, int i, int j, ResidualContexts mode) {
  std::vector<int> complement;
  for (int p = 0; p < n; ++p)
    if (p != i && p != j) complement.push_back(p);

  std::vector<std::vector<std::pair<int, int>>> contexts;
  const int count =
      mode == ResidualContexts::AllZero ? 1 : (1 << complement.size());
  for (int cs = 0; cs < count; ++cs) {
    std::vector<std::pair<int, int>> ctx;
    for (size_t k = 0; k < complement.size(); ++k)
      ctx.emplace_back(complement[k],
                       (cs >> (complement.size() - 1 - k)) & 1);
    contexts.push_back(std::move(ctx));
  }
  return contexts;
}

// Columns of the fully-local polytope: every per-party deterministic
// strategy assigns one outcome to each setting. Returns the stacked
// distribution over (setting row, outcome column) flattened row-major,
// plus per-column bookkeeping used by local_max_lp.
struct LocalVertices {
  Eigen::MatrixXd columns;          // (num_settings*num_outcomes) x num_vertices
  Eigen::VectorXd score_coeff;      // p_j - q_j per vertex
  Eigen::MatrixXd residual_coeff;   // num_constraints x num_vertices
};

LocalVertices local_vertices(int n) {
  const Eigen::Index settings = Eigen::Index{1} << n;
  const Eigen::Index outcomes = Eigen::Index{1} << n;
  // Strategy of one party: 2 bits, outcome for setting 0 and setting 1.
  Eigen::Index num_vertices = 1;
  for (int i = 0; i < n; ++i) num_vertices *= 4;

  LocalVertices v;
  v.columns = Eigen::MatrixXd::Zero(settings * outcomes, num_vertices);
  v.score_coeff = Eigen::VectorXd::Zero(num_vertices);
  v.residual_coeff = Eigen::MatrixXd::Zero(n, num_vertices);

  for (Eigen::Index j = 0; j < num_vertices; ++j) {
    std::vector<int> out0(n), out1(n);
    Eigen::Index rest = j;
    for (int p = n - 1; p >= 0; --p) {
      out0[p] = static_cast<int>(rest & 1);
      out1[p] = static_cast<int>((rest >> 1) & 1);
      rest >>= 2;
    }
    for (Eigen::Index s = 0; s < settings; ++s) {
      Eigen::Index x = 0;
      for (int p = 0; p < n; ++p) {
        const int setting = static_cast<int>((s >> (n - 1 - p)) & 1);
        x = x * 2 + (setting == 0 ? out0[p] : out1[p]);
      }
      v.columns(s * outcomes + x, j) = 1.0;
    }
    bool p_hit = true, q_hit = true;
    for (int p = 0; p < n; ++p) {
      p_hit = p_hit && out0[p] == 0;
      q_hit = q_hit && out1[p] == 1;
    }
    v.score_coeff(j) = (p_hit ? 1.0 : 0.0) - (q_hit ? 1.0 : 0.0);
    for (int i = 0; i < n; ++i) {
      const int next = (i + 1) % n;
      v.residual_coeff(i, j) =
          (out1[i] == 0 && out0[next] == 0) ? 1.0 : 0.0;
    }
  }
  return v;
}

Eigen::VectorXd flatten(const CorrelationTensor& tensor) {
  const Eigen::Index rows = tensor.num_settings();
  const Eigen::Index cols = tensor.num_outcomes();
  Eigen::VectorXd flat(rows * cols);
  for (Eigen::Index s = 0; s < rows; ++s)
    flat.segment(s * cols, cols) = tensor.probabilities.row(s).transpose();
  return flat;
}

void require_binary(const CorrelationTensor& tensor, const char* where) {
  for (int d : tensor.outcomes_per_party)
    if (d != 2)
      throw std::invalid_argument(std::string(where) +
                                  ": binary outcomes required");
}

// Shared phase-1 membership test: is `target` a convex combination of the
// given columns? On failure the Farkas vector is normalized to sup-norm 1
// over the tensor entries and the gap is re-evaluated directly against
// every column, so the certificate is checkable without trusting the LP.
LPCertificate membership_lp(const Eigen::MatrixXd& columns,
                            const Eigen::VectorXd& target, double tol) {
  const Eigen::Index rows = columns.rows();
  const Eigen::Index cols = columns.cols();

  Eigen::MatrixXd A(rows + 1, cols);
  A.topRows(rows) = columns;
  A.bottomRows(1).setOnes();
  Eigen::VectorXd b(rows + 1);
  b.head(rows) = target;
  b(rows) = 1.0;

  const lp::Result res = lp::solve_standard_form(
      A, b, Eigen::VectorXd::Zero(cols), kEqualityTol);

  LPCertificate cert;
  cert.tolerance = tol;
  if (res.status == lp::Status::Optimal) {
    cert.feasible = true;
    cert.weights = res.x;
    return cert;
  }
  if (res.status != lp::Status::Infeasible)
    throw std::runtime_error("membership LP failed to converge");

  Eigen::VectorXd functional = res.farkas.head(rows);
  const double scale = functional.cwiseAbs().maxCoeff();
  if (scale <= 0.0) throw std::runtime_error("membership LP: null certificate");
  functional /= scale;

  const double value_on_target = functional.dot(target);
  const double max_on_vertices =
      (functional.transpose() * columns).maxCoeff();
  cert.feasible = false;
  cert.separating_functional = functional;
  cert.gap = value_on_target - max_on_vertices;
  if (cert.gap <= kDualGapThreshold)
    throw std::runtime_error(
        "membership LP: infeasible but certificate gap below threshold");
  return cert;
}

}  // namespace

double ParadoxReport::residual_max() const {
  double m = 0.0;
  for (const auto& [id, value] : residuals) m = std::max(m, value);
  return m;
}

ParadoxReport constraint_residuals(const CorrelationTensor& tensor,
                                   ResidualContexts contexts) {
  const int n = tensor.num_parties;
  if (n < 2) throw std::invalid_argument("residuals: need at least 2 parties");

  ParadoxReport report;
  for (int i = 0; i < n; ++i) {
    const int next = (i + 1) % n;
    const int d_i = tensor.outcomes_per_party[i];
    for (int r = 0; r + 1 < d_i; ++r) {  // every outcome label except the last
      const int lo = std::min(i, next), hi = std::max(i, next);
      const std::vector<int> parties{lo, hi};
      const std::vector<int> settings{lo == i ? 1 : 0, hi == i ? 1 : 0};
      double value = 0.0;
      for (const auto& ctx : pair_contexts(n, i, next, contexts)) {
        const Eigen::VectorXd dist = marginal(tensor, parties, settings, ctx);
        const int out_i = r;
        const int out_next = 0;
        const Eigen::Index idx =
            lo == i ? out_i * tensor.outcomes_per_party[hi] + out_next
                    : out_next * tensor.outcomes_per_party[hi] + out_i;
        value = std::max(value, dist(idx));
      }
      std::ostringstream id;
      id << "P(" << party_label(i) << "=" << (r + 1) << "," << party_label(next)
         << "=1|" << party_label(i) << ":1," << party_label(next) << ":0)";
      report.residuals.emplace_back(id.str(), value);
    }
  }
  return report;
}

ParadoxReport score(const CorrelationTensor& tensor, ResidualContexts contexts) {
  ParadoxReport report = constraint_residuals(tensor, contexts);
  const int n = tensor.num_parties;

  std::vector<int> all_zero(n, 0), all_one(n, 1);
  std::vector<int> first(n, 0), last(n);
  for (int i = 0; i < n; ++i) last[i] = tensor.outcomes_per_party[i] - 1;

  report.p_n = tensor.probabilities(tensor.setting_index(all_zero),
                                    tensor.outcome_index(first));
  report.q_n = tensor.probabilities(tensor.setting_index(all_one),
                                    tensor.outcome_index(last));
  report.score = report.p_n - report.q_n;
  return report;
}

double local_max_lp(int num_parties, double epsilon) {
  if (num_parties != 3)
    throw std::invalid_argument("local_max_lp: implemented for N = 3");
  if (epsilon < 0.0 || epsilon > 1.0)
    throw std::invalid_argument("local_max_lp: epsilon must lie in [0, 1]");

  const LocalVertices v = local_vertices(num_parties);
  const Eigen::Index nv = v.columns.cols();
  const int nc = num_parties;  // one cyclic constraint per party

  // Variables: vertex weights plus one slack per residual constraint.
  Eigen::MatrixXd A = Eigen::MatrixXd::Zero(1 + nc, nv + nc);
  Eigen::VectorXd b(1 + nc);
  Eigen::VectorXd c = Eigen::VectorXd::Zero(nv + nc);
  A.row(0).head(nv).setOnes();
  b(0) = 1.0;
  for (int k = 0; k < nc; ++k) {
    A.row(1 + k).head(nv) = v.residual_coeff.row(k);
    A(1 + k, nv + k) = 1.0;
    b(1 + k) = epsilon;
  }
  c.head(nv) = v.score_coeff;

  const lp::Result res = lp::solve_standard_form(A, b, c);
  if (res.status != lp::Status::Optimal)
    throw std::runtime_error("local_max_lp: LP solve failed");
  return res.objective;
}

NSPolytopeVertexSet ns_polytope_vertices() {
  NSPolytopeVertexSet set;
  // 16 products of per-party deterministic strategies.
  for (int fa = 0; fa < 4; ++fa) {
    for (int fb = 0; fb < 4; ++fb) {
      Eigen::Matrix4d vtx = Eigen::Matrix4d::Zero();
      for (int x = 0; x < 2; ++x)
        for (int y = 0; y < 2; ++y) {
          const int a = (fa >> x) & 1;
          const int b = (fb >> y) & 1;
          vtx(2 * x + y, 2 * a + b) = 1.0;
        }
      set.vertices.push_back(vtx);
    }
  }
  set.num_deterministic = static_cast<int>(set.vertices.size());
  // 8 PR-box variants: a ⊕ b = xy ⊕ αx ⊕ βy ⊕ γ, uniform marginals.
  for (int al = 0; al < 2; ++al)
    for (int be = 0; be < 2; ++be)
      for (int ga = 0; ga < 2; ++ga) {
        Eigen::Matrix4d vtx = Eigen::Matrix4d::Zero();
        for (int x = 0; x < 2; ++x)
          for (int y = 0; y < 2; ++y)
            for (int a = 0; a < 2; ++a)
              for (int b = 0; b < 2; ++b)
                if (((a + b) & 1) ==
                    ((x * y + al * x + be * y + ga) & 1))
                  vtx(2 * x + y, 2 * a + b) = 0.5;
        set.vertices.push_back(vtx);
      }
  return set;
}

LPCertificate membership_local(const CorrelationTensor& tensor, double tol) {
  require_binary(tensor, "membership_local");
  const LocalVertices v = local_vertices(tensor.num_parties);
  return membership_lp(v.columns, flatten(tensor), tol);
}

LPCertificate membership_hybrid(const CorrelationTensor& tensor, double tol) {
  if (tensor.num_parties != 3)
    throw std::invalid_argument("membership_hybrid: implemented for N = 3");
  require_binary(tensor, "membership_hybrid");

  const NSPolytopeVertexSet ns = ns_polytope_vertices();
  const int num_ns = static_cast<int>(ns.vertices.size());

  // Bipartitions of {0,1,2}: the pair shares an NS vertex, the singleton
  // follows a deterministic strategy.
  const std::array<std::array<int, 3>, 3> splits = {{
      {0, 1, 2},  // pair (0,1), singleton 2
      {1, 2, 0},  // pair (1,2), singleton 0
      {0, 2, 1},  // pair (0,2), singleton 1
  }};

  const Eigen::Index rows = 64;
  Eigen::MatrixXd columns(rows, 3 * num_ns * 4);
  Eigen::Index col = 0;
  for (const auto& [p1, p2, single] : splits) {
    for (int vi = 0; vi < num_ns; ++vi) {
      for (int g = 0; g < 4; ++g) {
        Eigen::VectorXd column = Eigen::VectorXd::Zero(rows);
        for (int s = 0; s < 8; ++s) {
          const int settings[3] = {(s >> 2) & 1, (s >> 1) & 1, s & 1};
          for (int x = 0; x < 8; ++x) {
            const int outs[3] = {(x >> 2) & 1, (x >> 1) & 1, x & 1};
            const double pair_p =
                ns.vertices[vi](2 * settings[p1] + settings[p2],
                                2 * outs[p1] + outs[p2]);
            const int single_out = (g >> settings[single]) & 1;
            const double single_p = outs[single] == single_out ? 1.0 : 0.0;
            column(s * 8 + x) = pair_p * single_p;
          }
        }
        columns.col(col++) = column;
      }
    }
  }
  return membership_lp(columns, flatten(tensor), tol);
}

}  // namespace gmn
