#include "gmn/state.hpp"

#include <bit>
#include <cmath>
#include <numbers>
#include <stdexcept>

namespace gmn {

namespace {

constexpr double kNormTol = 1e-12;
constexpr double kRadicandTol = 1e-12;

void check_angle_ranges(const ConstrainedFamilyParams& p) {
  if (p.num_parties < 2)
    throw std::invalid_argument("constrained family: num_parties must be >= 2");
  if (p.alphas.size() != p.num_parties || p.phis.size() != p.num_parties)
    throw std::invalid_argument("constrained family: need one (alpha, phi) per party");
  if (p.a < 0.0 || p.a > 1.0)
    throw std::invalid_argument("constrained family: a must lie in [0, 1]");
  if (p.delta < 0.0 || p.delta >= 2.0 * std::numbers::pi)
    throw std::invalid_argument("constrained family: delta must lie in [0, 2pi)");
  for (int i = 0; i < p.num_parties; ++i) {
    if (!(p.alphas(i) > 0.0 && p.alphas(i) < std::numbers::pi))
      throw std::invalid_argument("constrained family: alpha must lie in (0, pi)");
    if (p.phis(i) < 0.0 || p.phis(i) >= 2.0 * std::numbers::pi)
      throw std::invalid_argument("constrained family: phi must lie in [0, 2pi)");
  }
}

}  // namespace

double optimal_a3() {
  return 0.5 * std::sqrt((316.0 - 17.0 * std::sqrt(158.0)) / 1106.0);
}

Eigen::Matrix2cd MeasurementBasis::setting_basis(int setting) const {
  Eigen::Matrix2cd basis;
  if (setting == 0) {
    basis.setIdentity();
    return basis;
  }
  if (setting != 1) throw std::invalid_argument("setting must be 0 or 1");
  const double c = std::cos(alpha / 2.0);
  const double s = std::sin(alpha / 2.0);
  const std::complex<double> phase = std::polar(1.0, phi);
  basis(0, 0) = c;
  basis(1, 0) = phase * s;
  basis(0, 1) = -s;
  basis(1, 1) = phase * c;
  return basis;
}

MeasurementBasis build_measurement_basis(double alpha, double phi) {
  if (!(alpha > 0.0 && alpha < std::numbers::pi))
    throw std::invalid_argument(
        "measurement basis: alpha must lie strictly inside (0, pi)");
  if (phi < 0.0 || phi >= 2.0 * std::numbers::pi)
    throw std::invalid_argument("measurement basis: phi must lie in [0, 2pi)");
  return MeasurementBasis{alpha, phi};
}

double constrained_radicand(const ConstrainedFamilyParams& p) {
  check_angle_ranges(p);
  // Π(1+cot²) − Πcot², the squared-norm mass of every string except 1…1.
  double prod_one_plus = 1.0;
  double prod_cot_sq = 1.0;
  for (int i = 0; i < p.num_parties; ++i) {
    const double t = 1.0 / std::tan(p.alphas(i) / 2.0);
    prod_one_plus *= 1.0 + t * t;
    prod_cot_sq *= t * t;
  }
  return 1.0 - p.a * p.a * (prod_one_plus - prod_cot_sq);
}

StateVector build_constrained_state(const ConstrainedFamilyParams& p) {
  const double radicand = constrained_radicand(p);
  if (radicand < -kRadicandTol)
    throw std::domain_error(
        "constrained family: a too large for the given alphas (radicand < 0)");

  const int n = p.num_parties;
  const Eigen::Index dim = Eigen::Index{1} << n;
  StateVector state;
  state.num_parties = n;
  state.local_dims.assign(n, 2);
  state.amplitudes.resize(dim);

  Eigen::VectorXd cot(n);
  for (int i = 0; i < n; ++i) cot(i) = 1.0 / std::tan(p.alphas(i) / 2.0);

  for (Eigen::Index idx = 0; idx < dim; ++idx) {
    if (idx == dim - 1) {
      state.amplitudes(idx) =
          std::polar(std::sqrt(std::max(radicand, 0.0)), p.delta);
      continue;
    }
    double mag = p.a;
    double phase = 0.0;
    int weight = 0;
    for (int i = 0; i < n; ++i) {
      if ((idx >> (n - 1 - i)) & 1) {  // party 0 most significant
        mag *= cot(i);
        phase += p.phis(i);
        ++weight;
      }
    }
    const double sign = (weight % 2 == 0) ? 1.0 : -1.0;
    state.amplitudes(idx) = sign * std::polar(mag, phase);
  }
  return state;
}

ConstrainedFamilyParams optimal_family_params(int num_parties) {
  ConstrainedFamilyParams p;
  p.num_parties = num_parties;
  p.phis = Eigen::VectorXd::Zero(num_parties);
  if (num_parties == 3) {
    p.a = optimal_a3();
    p.delta = 0.0;
    p.alphas = Eigen::VectorXd::Constant(3, std::numbers::pi / 2.0);
  } else if (num_parties == 4) {
    p.a = kOptimalA4;
    p.delta = std::numbers::pi;
    p.alphas = Eigen::VectorXd::Constant(4, kOptimalAlpha4);
  } else {
    throw std::invalid_argument("optimal family params available for N = 3, 4");
  }
  return p;
}

StateVector build_named_state(NamedState name) {
  const auto basis_state = [](int n, Eigen::Index idx) {
    StateVector s;
    s.num_parties = n;
    s.local_dims.assign(n, 2);
    s.amplitudes = Eigen::VectorXcd::Zero(Eigen::Index{1} << n);
    s.amplitudes(idx) = 1.0;
    return s;
  };
  switch (name) {
    case NamedState::GHZ3: {
      StateVector s = basis_state(3, 0);
      s.amplitudes(0) = s.amplitudes(7) = 1.0 / std::sqrt(2.0);
      return s;
    }
    case NamedState::W3: {
      StateVector s = basis_state(3, 0);
      s.amplitudes.setZero();
      s.amplitudes(1) = s.amplitudes(2) = s.amplitudes(4) = 1.0 / std::sqrt(3.0);
      return s;
    }
    case NamedState::GHZ4: {
      StateVector s = basis_state(4, 0);
      s.amplitudes(0) = s.amplitudes(15) = 1.0 / std::sqrt(2.0);
      return s;
    }
    case NamedState::W4: {
      StateVector s = basis_state(4, 0);
      s.amplitudes.setZero();
      s.amplitudes(1) = s.amplitudes(2) = s.amplitudes(4) = s.amplitudes(8) = 0.5;
      return s;
    }
    case NamedState::PSI_STAR_3:
      return build_constrained_state(optimal_family_params(3));
    case NamedState::PSI_STAR_4:
      return build_constrained_state(optimal_family_params(4));
  }
  throw std::invalid_argument("unknown named state");
}

std::string to_string(NamedState name) {
  switch (name) {
    case NamedState::GHZ3: return "GHZ3";
    case NamedState::W3: return "W3";
    case NamedState::GHZ4: return "GHZ4";
    case NamedState::W4: return "W4";
    case NamedState::PSI_STAR_3: return "PSI_STAR_3";
    case NamedState::PSI_STAR_4: return "PSI_STAR_4";
  }
  return "?";
}

StateVector build_named_state(const std::string& name) {
  for (NamedState s : {NamedState::GHZ3, NamedState::W3, NamedState::GHZ4,
                       NamedState::W4, NamedState::PSI_STAR_3,
                       NamedState::PSI_STAR_4}) {
    if (to_string(s) == name) return build_named_state(s);
  }
  throw std::invalid_argument("unknown named state: " + name);
}

std::complex<double> inner_product(const StateVector& a, const StateVector& b) {
  if (a.dim() != b.dim())
    throw std::invalid_argument("inner product: dimension mismatch");
  return a.amplitudes.dot(b.amplitudes);  // Eigen's dot conjugates the lhs
}

StateVector make_state(int num_parties, std::vector<int> local_dims,
                       Eigen::VectorXcd amplitudes) {
  if (num_parties < 2)
    throw std::invalid_argument("state: num_parties must be >= 2");
  if (static_cast<int>(local_dims.size()) != num_parties)
    throw std::invalid_argument("state: one local dimension per party");
  Eigen::Index dim = 1;
  for (int d : local_dims) {
    if (d < 2) throw std::invalid_argument("state: local dims must be >= 2");
    dim *= d;
  }
  if (amplitudes.size() != dim)
    throw std::invalid_argument("state: amplitude length != product of dims");
  if (std::abs(amplitudes.squaredNorm() - 1.0) > kNormTol)
    throw std::invalid_argument("state: amplitudes are not normalized");
  return StateVector{num_parties, std::move(local_dims), std::move(amplitudes)};
}

}  // namespace gmn
