#include "gmn/optimize.hpp"

#include <atomic>
#include <cmath>
#include <cstdlib>
#include <numbers>
#include <random>
#include <stdexcept>
#include <thread>

#include "gmn/correlations.hpp"
#include "gmn/paradox.hpp"

namespace gmn {

namespace {

using Eigen::VectorXd;

double sigmoid(double z) { return 1.0 / (1.0 + std::exp(-z)); }

std::uint64_t mix_seed(std::uint64_t seed, std::uint64_t idx) {
  std::uint64_t z = seed + 0x9E3779B97F4A7C15ULL * (idx + 1);
  z = (z ^ (z >> 30)) * 0xBF58476D1CE4E5B9ULL;
  z = (z ^ (z >> 27)) * 0x94D049BB133111EBULL;
  return z ^ (z >> 31);
}

void parallel_for(int count, int threads, const std::function<void(int)>& fn) {
  threads = std::min(threads, count);
  if (threads <= 1) {
    for (int i = 0; i < count; ++i) fn(i);
    return;
  }
  std::atomic<int> next{0};
  std::vector<std::thread> pool;
  pool.reserve(threads);
  for (int t = 0; t < threads; ++t) {
    pool.emplace_back([&] {
      for (int i = next.fetch_add(1); i < count; i = next.fetch_add(1)) fn(i);
    });
  }
  for (auto& th : pool) th.join();
}

// Closed-form ingredients of the family score. With phases folded into
// delta_eff = delta − Σφ:
//   m = (−1)^N a X + e^{i delta_eff} √R Y,   S = a² − |m|².
struct FamilyEval {
  double score;
  double d_a;
  VectorXd d_alpha;
};

FamilyEval family_eval(int n, double a, const VectorXd& alphas,
                       double delta_eff, bool want_gradient) {
  VectorXd s(n), c(n);
  for (int i = 0; i < n; ++i) {
    s(i) = std::sin(alphas(i) / 2.0);
    c(i) = std::cos(alphas(i) / 2.0);
  }
  double P1 = 1.0, P2 = 1.0, Y = 1.0, Q1 = 1.0, Q2 = 1.0;
  for (int i = 0; i < n; ++i) {
    P1 /= s(i);
    P2 *= c(i) * c(i) / s(i);
    Y *= c(i);
    Q1 /= s(i) * s(i);
    Q2 *= c(i) * c(i) / (s(i) * s(i));
  }
  const double X = P1 - P2;
  const double K = Q1 - Q2;
  const double R = std::max(1.0 - a * a * K, 0.0);
  const double sqrtR = std::sqrt(R);
  const double sign_n = (n % 2 == 0) ? 1.0 : -1.0;
  const double ce = std::cos(delta_eff);
  const double se = std::sin(delta_eff);

  const double mr = sign_n * a * X + ce * sqrtR * Y;
  const double mi = se * sqrtR * Y;

  FamilyEval eval;
  eval.score = a * a - (mr * mr + mi * mi);
  if (!want_gradient) return eval;

  const double dsqrtR_da = sqrtR > 1e-150 ? -a * K / sqrtR : 0.0;
  eval.d_a = 2.0 * a -
             2.0 * mr * (sign_n * X + ce * Y * dsqrtR_da) -
             2.0 * mi * (se * Y * dsqrtR_da);

  eval.d_alpha.resize(n);
  for (int i = 0; i < n; ++i) {
    const double dP1 = -P1 * c(i) / (2.0 * s(i));
    const double dP2 = P2 * (-s(i) / c(i) - c(i) / (2.0 * s(i)));
    const double dX = dP1 - dP2;
    const double dY = -Y * s(i) / (2.0 * c(i));
    const double dQ1 = -Q1 * c(i) / s(i);
    const double dQ2 = Q2 * (-s(i) / c(i) - c(i) / s(i));
    const double dK = dQ1 - dQ2;
    const double dsqrtR = sqrtR > 1e-150 ? -a * a * dK / (2.0 * sqrtR) : 0.0;
    const double dmr = sign_n * a * dX + ce * (dsqrtR * Y + sqrtR * dY);
    const double dmi = se * (dsqrtR * Y + sqrtR * dY);
    eval.d_alpha(i) = -2.0 * (mr * dmr + mi * dmi);
  }
  return eval;
}

double delta_eff_of(const ConstrainedFamilyParams& p) {
  return p.delta - p.phis.sum();
}

// p, q and the three cyclic residuals for an (already normalized) 3-qubit
// amplitude vector with zero measurement phases.
struct QubitEval {
  double p;
  double q;
  Eigen::Vector3d residuals;
};

QubitEval eval_qubit3(const Eigen::VectorXcd& psi, const Eigen::Vector3d& alphas) {
  Eigen::Vector3d s, c;
  for (int i = 0; i < 3; ++i) {
    s(i) = std::sin(alphas(i) / 2.0);
    c(i) = std::cos(alphas(i) / 2.0);
  }
  QubitEval e;
  e.p = std::norm(psi(0));
  std::complex<double> overlap = 0.0;
  for (int x = 0; x < 8; ++x) {
    double w = 1.0;
    for (int i = 0; i < 3; ++i)
      w *= ((x >> (2 - i)) & 1) ? c(i) : -s(i);
    overlap += w * psi(x);
  }
  e.q = std::norm(overlap);
  // pair (A,B): A at setting 1 outcome +, B at setting 0 outcome 0.
  e.residuals(0) = std::norm(c(0) * psi(0b000) + s(0) * psi(0b100)) +
                   std::norm(c(0) * psi(0b001) + s(0) * psi(0b101));
  // pair (B,C)
  e.residuals(1) = std::norm(c(1) * psi(0b000) + s(1) * psi(0b010)) +
                   std::norm(c(1) * psi(0b100) + s(1) * psi(0b110));
  // pair (C,A)
  e.residuals(2) = std::norm(c(2) * psi(0b000) + s(2) * psi(0b001)) +
                   std::norm(c(2) * psi(0b010) + s(2) * psi(0b011));
  return e;
}

std::function<double(const VectorXd&, VectorXd*)> with_fd_gradient(
    const std::function<double(const VectorXd&)>& value) {
  return [value](const VectorXd& x, VectorXd* grad) {
    const double f = value(x);
    if (grad) {
      grad->resize(x.size());
      VectorXd xp = x;
      for (Eigen::Index i = 0; i < x.size(); ++i) {
        const double h = 1e-7 * std::max(1.0, std::abs(x(i)));
        xp(i) = x(i) + h;
        const double fp = value(xp);
        xp(i) = x(i) - h;
        const double fm = value(xp);
        xp(i) = x(i);
        (*grad)(i) = (fp - fm) / (2.0 * h);
      }
    }
    return f;
  };
}

int env_threads() {
  if (const char* env = std::getenv("GMN_THREADS")) {
    const int v = std::atoi(env);
    if (v > 0) return v;
  }
  return 0;
}

ParadoxReport pipeline_report(const StateVector& state, const VectorXd& alphas) {
  std::vector<MeasurementBasis> bases;
  for (Eigen::Index i = 0; i < alphas.size(); ++i)
    bases.push_back(build_measurement_basis(alphas(i), 0.0));
  return score(correlation_tensor(state, bases));
}

}  // namespace

double constrained_score(const ConstrainedFamilyParams& params) {
  if (constrained_radicand(params) < -1e-12)
    throw std::domain_error("constrained_score: infeasible parameters");
  return family_eval(params.num_parties, params.a, params.alphas,
                     delta_eff_of(params), false)
      .score;
}

VectorXd constrained_score_gradient(const ConstrainedFamilyParams& params) {
  if (constrained_radicand(params) < -1e-12)
    throw std::domain_error("constrained_score_gradient: infeasible parameters");
  const FamilyEval e = family_eval(params.num_parties, params.a, params.alphas,
                                   delta_eff_of(params), true);
  VectorXd g(params.num_parties + 1);
  g(0) = e.d_a;
  g.tail(params.num_parties) = e.d_alpha;
  return g;
}

namespace detail {

int resolve_threads(int requested) {
  if (requested > 0) return requested;
  if (const int env = env_threads(); env > 0) return env;
  const unsigned hw = std::thread::hardware_concurrency();
  return hw > 0 ? static_cast<int>(hw) : 1;
}

BfgsOutcome bfgs_minimize(
    const std::function<double(const VectorXd&, VectorXd*)>& fn, VectorXd x0,
    const BfgsOptions& opts) {
  const Eigen::Index n = x0.size();
  BfgsOutcome out;
  out.x = std::move(x0);

  Eigen::MatrixXd H = Eigen::MatrixXd::Identity(n, n);
  VectorXd g(n);
  out.f = fn(out.x, &g);

  for (out.iterations = 0; out.iterations < opts.max_iterations;
       ++out.iterations) {
    out.grad_norm = g.cwiseAbs().maxCoeff();
    if (out.grad_norm <= opts.grad_tol) {
      out.converged = true;
      return out;
    }

    VectorXd d = -H * g;
    double slope = g.dot(d);
    if (!(slope < 0.0)) {
      H.setIdentity();
      d = -g;
      slope = g.dot(d);
    }

    double step = 1.0;
    double f_new = 0.0;
    VectorXd x_new;
    bool accepted = false;
    for (int ls = 0; ls < 50; ++ls) {
      x_new = out.x + step * d;
      f_new = fn(x_new, nullptr);
      if (std::isfinite(f_new) && f_new <= out.f + 1e-4 * step * slope) {
        accepted = true;
        break;
      }
      step *= 0.5;
    }
    if (!accepted) return out;  // no decrease along a descent direction

    VectorXd g_new(n);
    fn(x_new, &g_new);

    const VectorXd svec = x_new - out.x;
    const VectorXd yvec = g_new - g;
    const double sy = svec.dot(yvec);
    if (sy > 1e-12 * svec.norm() * yvec.norm()) {
      const double rho = 1.0 / sy;
      const Eigen::MatrixXd I = Eigen::MatrixXd::Identity(n, n);
      H = (I - rho * svec * yvec.transpose()) * H *
              (I - rho * yvec * svec.transpose()) +
          rho * svec * svec.transpose();
    }
    out.x = std::move(x_new);
    out.f = f_new;
    g = std::move(g_new);
  }
  out.grad_norm = g.cwiseAbs().maxCoeff();
  out.converged = out.grad_norm <= opts.grad_tol;
  return out;
}

}  // namespace detail

OptimizationResult maximize_constrained(int num_parties,
                                        const MaximizeOptions& opts) {
  if (num_parties < 3)
    throw std::invalid_argument("maximize_constrained: num_parties must be >= 3");
  const int n = num_parties;
  const double delta_eff = (n % 2 == 0) ? std::numbers::pi : 0.0;

  // Smooth unconstrained reparametrization: alpha_i = pi*sigmoid(z_i) and
  // a = sigmoid(z_0)/sqrt(K(alpha)), which keeps the radicand positive.
  const bool freeze_a = opts.freeze_a;
  const int dim = freeze_a ? n : n + 1;

  const auto unpack = [&](const VectorXd& z, double& a, VectorXd& alphas,
                          double& u, double& K) {
    alphas.resize(n);
    const int off = freeze_a ? 0 : 1;
    for (int i = 0; i < n; ++i)
      alphas(i) = std::numbers::pi * sigmoid(z(off + i));
    double Q1 = 1.0, Q2 = 1.0;
    for (int i = 0; i < n; ++i) {
      const double si = std::sin(alphas(i) / 2.0);
      const double ci = std::cos(alphas(i) / 2.0);
      Q1 /= si * si;
      Q2 *= ci * ci / (si * si);
    }
    K = Q1 - Q2;
    u = freeze_a ? 0.0 : sigmoid(z(0));
    a = freeze_a ? 0.0 : u / std::sqrt(K);
  };

  const auto objective = [&](const VectorXd& z, VectorXd* grad) {
    double a, u, K;
    VectorXd alphas;
    unpack(z, a, alphas, u, K);
    const FamilyEval e = family_eval(n, a, alphas, delta_eff, grad != nullptr);
    if (grad) {
      grad->resize(dim);
      const int off = freeze_a ? 0 : 1;
      // dK/dalpha_i is recomputed here for the chain rule through a(z).
      double Q1 = 1.0, Q2 = 1.0;
      VectorXd s(n), c(n);
      for (int i = 0; i < n; ++i) {
        s(i) = std::sin(alphas(i) / 2.0);
        c(i) = std::cos(alphas(i) / 2.0);
        Q1 /= s(i) * s(i);
        Q2 *= c(i) * c(i) / (s(i) * s(i));
      }
      for (int i = 0; i < n; ++i) {
        const double dQ1 = -Q1 * c(i) / s(i);
        const double dQ2 = Q2 * (-s(i) / c(i) - c(i) / s(i));
        const double dK = dQ1 - dQ2;
        const double da_dalpha = freeze_a ? 0.0 : -0.5 * a * dK / K;
        const double zi = z(off + i);
        const double dalpha_dz =
            std::numbers::pi * sigmoid(zi) * (1.0 - sigmoid(zi));
        (*grad)(off + i) =
            -(e.d_alpha(i) + e.d_a * da_dalpha) * dalpha_dz;
      }
      if (!freeze_a) {
        const double du_dz = sigmoid(z(0)) * (1.0 - sigmoid(z(0)));
        (*grad)(0) = -e.d_a / std::sqrt(K) * du_dz;
      }
    }
    return -e.score;
  };

  struct Restart {
    double score = -1e300;
    VectorXd z;
    bool converged = false;
  };
  std::vector<Restart> outcomes(opts.restarts);

  detail::BfgsOptions bopts;
  bopts.max_iterations = opts.max_iterations;

  parallel_for(opts.restarts, detail::resolve_threads(opts.threads), [&](int r) {
    std::mt19937_64 rng(mix_seed(opts.seed, r));
    std::normal_distribution<double> dist(0.0, 1.5);
    VectorXd z0(dim);
    for (int i = 0; i < dim; ++i) z0(i) = dist(rng);
    const detail::BfgsOutcome res = detail::bfgs_minimize(objective, z0, bopts);
    outcomes[r] = {-res.f, res.x, res.converged};
  });

  int best = 0;
  for (int r = 1; r < opts.restarts; ++r)
    if (outcomes[r].score > outcomes[best].score) best = r;

  // Polish the winner with a tighter gradient tolerance.
  detail::BfgsOptions polish;
  polish.max_iterations = 2 * opts.max_iterations;
  polish.grad_tol = 1e-13;
  const detail::BfgsOutcome final_run =
      detail::bfgs_minimize(objective, outcomes[best].z, polish);

  double a, u, K;
  VectorXd alphas;
  unpack(final_run.x, a, alphas, u, K);

  OptimizationResult result;
  result.num_parties = n;
  result.restarts = opts.restarts;
  result.seed = opts.seed;
  result.best_score = -final_run.f;
  result.converged = final_run.converged;

  ConstrainedFamilyParams params;
  params.num_parties = n;
  params.a = a;
  params.delta = delta_eff;
  params.alphas = alphas;
  params.phis = VectorXd::Zero(n);
  result.family = params;

  result.residual_max =
      pipeline_report(build_constrained_state(params), alphas).residual_max();
  return result;
}

OptimizationResult maximize_general_qubit(int num_parties,
                                          const MaximizeOptions& opts) {
  if (num_parties != 3)
    throw std::invalid_argument("maximize_general_qubit: N = 3 scope");

  const bool fixed_angles = opts.fixed_alphas.has_value();
  if (fixed_angles && opts.fixed_alphas->size() != 3)
    throw std::invalid_argument("maximize_general_qubit: need 3 fixed alphas");
  const int dim = fixed_angles ? 16 : 19;

  const auto unpack = [&](const VectorXd& x, Eigen::VectorXcd& psi,
                          Eigen::Vector3d& alphas) {
    psi.resize(8);
    for (int i = 0; i < 8; ++i) psi(i) = {x(i), x(8 + i)};
    const double nrm = psi.norm();
    psi /= nrm > 1e-12 ? nrm : 1.0;
    for (int i = 0; i < 3; ++i)
      alphas(i) = fixed_angles ? (*opts.fixed_alphas)(i)
                               : std::numbers::pi * sigmoid(x(16 + i));
  };

  const auto value_at = [&](const VectorXd& x, double mu) {
    Eigen::VectorXcd psi;
    Eigen::Vector3d alphas;
    unpack(x, psi, alphas);
    if (psi.norm() < 0.5) return 1e6;  // collapsed parameter vector
    const QubitEval e = eval_qubit3(psi, alphas);
    return -(e.p - e.q) + mu * e.residuals.squaredNorm();
  };

  std::vector<double> schedule;
  if (opts.penalty_override)
    schedule = {*opts.penalty_override};
  else
    schedule = {1e2, 1e4, 1e6, 1e8, 1e10};

  struct Restart {
    double score = -1e300;
    double residual_max = 1e300;
    VectorXd x;
  };
  std::vector<Restart> outcomes(opts.restarts);

  parallel_for(opts.restarts, detail::resolve_threads(opts.threads), [&](int r) {
    std::mt19937_64 rng(mix_seed(opts.seed ^ 0xABCDEF, r));
    std::normal_distribution<double> dist(0.0, 1.0);
    VectorXd x(dim);
    for (int i = 0; i < dim; ++i) x(i) = dist(rng);

    detail::BfgsOptions bopts;
    bopts.max_iterations = opts.max_iterations;
    bopts.grad_tol = 1e-10;
    for (double mu : schedule) {
      const auto fn =
          with_fd_gradient([&](const VectorXd& v) { return value_at(v, mu); });
      x = detail::bfgs_minimize(fn, x, bopts).x;
    }

    Eigen::VectorXcd psi;
    Eigen::Vector3d alphas;
    unpack(x, psi, alphas);
    const QubitEval e = eval_qubit3(psi, alphas);
    outcomes[r] = {e.p - e.q, e.residuals.maxCoeff(), x};
  });

  const bool constrained = !opts.penalty_override.has_value();
  int best = -1;
  for (int r = 0; r < opts.restarts; ++r) {
    if (constrained && outcomes[r].residual_max > 1e-7) continue;
    if (best < 0 || outcomes[r].score > outcomes[best].score) best = r;
  }
  if (best < 0) best = 0;  // nothing met the residual target; report honestly

  Eigen::VectorXcd psi;
  Eigen::Vector3d alphas;
  unpack(outcomes[best].x, psi, alphas);

  OptimizationResult result;
  result.num_parties = 3;
  result.restarts = opts.restarts;
  result.seed = opts.seed;
  result.best_score = outcomes[best].score;
  result.general = GeneralQubitSolution{psi, alphas};

  StateVector state;
  state.num_parties = 3;
  state.local_dims = {2, 2, 2};
  state.amplitudes = psi;
  result.residual_max = pipeline_report(state, alphas).residual_max();
  result.converged = !constrained || result.residual_max <= 1e-8;
  return result;
}

StateVector ansatz_state(const Eigen::Vector4d& a) {
  Eigen::VectorXcd psi(8);
  psi << a(0), a(1), a(1), a(2), a(1), a(2), a(2), a(3);
  const double nrm = psi.norm();
  if (nrm < 1e-12) throw std::invalid_argument("ansatz_state: zero vector");
  psi /= nrm;
  StateVector s;
  s.num_parties = 3;
  s.local_dims = {2, 2, 2};
  s.amplitudes = psi;
  return s;
}

std::vector<SweepRecord> noise_sweep(const std::vector<double>& eps_grid,
                                     const SweepOptions& opts) {
  for (double e : eps_grid)
    if (e < 0.0 || e >= 1.0 / 3.0)
      throw std::invalid_argument("noise_sweep: epsilon must lie in [0, 1/3)");
  for (size_t i = 1; i < eps_grid.size(); ++i)
    if (eps_grid[i] < eps_grid[i - 1])
      throw std::invalid_argument("noise_sweep: grid must be ascending");

  const StateVector psi_star = build_named_state(NamedState::PSI_STAR_3);

  // Parameter layout: 4 raw amplitudes + 3 angle squashes.
  const auto unpack = [&](const VectorXd& x, Eigen::Vector4d& amps,
                          Eigen::Vector3d& alphas) {
    amps = x.head<4>();
    for (int i = 0; i < 3; ++i)
      alphas(i) = std::numbers::pi * sigmoid(x(4 + i));
  };
  const auto eval_point = [&](const VectorXd& x) {
    Eigen::Vector4d amps;
    Eigen::Vector3d alphas;
    unpack(x, amps, alphas);
    const StateVector state = ansatz_state(amps);
    return std::pair(eval_qubit3(state.amplitudes, alphas), state);
  };

  const double a3 = optimal_a3();
  VectorXd family_opt(7);
  family_opt << a3, -a3, a3, std::sqrt(1.0 - 7.0 * a3 * a3), 0.0, 0.0, 0.0;

  std::vector<SweepRecord> records;
  std::optional<VectorXd> prev_argmax;

  for (double eps : eps_grid) {
    const auto violation = [&](const QubitEval& e) {
      return (e.residuals.array() - eps).max(0.0).matrix().eval();
    };
    const auto penalized = [&](const VectorXd& x, double mu) {
      Eigen::Vector4d amps;
      Eigen::Vector3d alphas;
      unpack(x, amps, alphas);
      if (amps.norm() < 1e-8) return 1e6;
      const QubitEval e = eval_qubit3(ansatz_state(amps).amplitudes, alphas);
      return -(e.p - e.q) + mu * violation(e).squaredNorm();
    };

    struct Candidate {
      double score = -1e300;
      VectorXd x;
      bool ok = false;
    };
    const auto consider = [&](Candidate& best, const VectorXd& x) {
      const QubitEval e = eval_point(x).first;
      if ((e.residuals.array() <= eps + 1e-10).all()) {
        const double sc = e.p - e.q;
        if (!best.ok || sc > best.score) best = {sc, x, true};
      }
    };

    std::vector<VectorXd> starts;
    if (prev_argmax) starts.push_back(*prev_argmax);
    starts.push_back(family_opt);
    {
      std::mt19937_64 rng(mix_seed(opts.seed ^ 0x5EED, records.size()));
      std::normal_distribution<double> dist(0.0, 1.0);
      for (int r = 0; r < opts.restarts; ++r) {
        VectorXd x(7);
        for (int i = 0; i < 7; ++i) x(i) = dist(rng);
        starts.push_back(x);
      }
    }

    std::vector<Candidate> bests(starts.size());
    parallel_for(static_cast<int>(starts.size()),
                 detail::resolve_threads(opts.threads), [&](int si) {
      Candidate local;
      consider(local, starts[si]);
      VectorXd x = starts[si];
      detail::BfgsOptions bopts;
      bopts.max_iterations = opts.max_iterations;
      bopts.grad_tol = 1e-11;
      for (double mu : {1e4, 1e6, 1e8, 1e10, 1e12}) {
        const auto fn = with_fd_gradient(
            [&](const VectorXd& v) { return penalized(v, mu); });
        x = detail::bfgs_minimize(fn, x, bopts).x;
        consider(local, x);
      }
      // Feasibility polish: pull a near-feasible endpoint inside the band.
      const QubitEval e_end = eval_point(x).first;
      if (!(e_end.residuals.array() <= eps + 1e-10).all()) {
        const auto restore = with_fd_gradient([&](const VectorXd& v) {
          Eigen::Vector4d amps;
          Eigen::Vector3d alphas;
          unpack(v, amps, alphas);
          if (amps.norm() < 1e-8) return 1e6;
          const QubitEval e = eval_qubit3(ansatz_state(amps).amplitudes, alphas);
          return (e.residuals.array() - eps * (1.0 - 1e-9)).max(0.0)
              .matrix()
              .squaredNorm();
        });
        x = detail::bfgs_minimize(restore, x, bopts).x;
        consider(local, x);
      }
      bests[si] = local;
    });

    Candidate best;
    for (const Candidate& c : bests)
      if (c.ok && (!best.ok || c.score > best.score)) best = c;

    SweepRecord rec;
    rec.epsilon = eps;
    rec.local_bound = 3.0 * eps;
    rec.converged = best.ok;
    if (best.ok) {
      Eigen::Vector4d amps;
      Eigen::Vector3d alphas;
      unpack(best.x, amps, alphas);
      const StateVector state = ansatz_state(amps);
      rec.qubit_max = best.score;
      rec.ansatz_amplitudes.resize(4);
      rec.ansatz_amplitudes << state.amplitudes(0).real(),
          state.amplitudes(1).real(), state.amplitudes(3).real(),
          state.amplitudes(7).real();
      rec.alphas = alphas;
      rec.p_eps = trace_distance(state, psi_star);
      rec.p_eps_vector = vector_one_norm_distance(state, psi_star);
      prev_argmax = best.x;
    }
    records.push_back(std::move(rec));
  }
  return records;
}

double trace_distance(const StateVector& a, const StateVector& b) {
  const std::complex<double> overlap = inner_product(a, b);
  const double fidelity = std::min(std::norm(overlap), 1.0);
  return std::sqrt(1.0 - fidelity);
}

double vector_one_norm_distance(const StateVector& a, const StateVector& b) {
  if (a.dim() != b.dim())
    throw std::invalid_argument("distance: dimension mismatch");
  return 0.5 * (a.amplitudes - b.amplitudes).cwiseAbs().sum();
}

}  // namespace gmn
