#include "oplax/oscillator.hpp"

#include <cmath>
#include <stdexcept>

namespace oplax {

void validate(const OscState& s) {
  if (!(s.omega > 0.0)) throw std::invalid_argument("OscState: omega must be > 0");
  if (!std::isfinite(s.q) || !std::isfinite(s.p) || !std::isfinite(s.omega))
    throw std::invalid_argument("OscState: non-finite entry");
}

double hamiltonian(const OscState& s) {
  validate(s);
  return 0.5 * (s.p * s.p + s.omega * s.omega * s.q * s.q);
}

PhaseVelocity hamiltonian_vector_field(const OscState& s) {
  validate(s);
  return {s.p, -s.omega * s.omega * s.q};
}

OscState exact_trajectory(const OscState& s0, double t) {
  validate(s0);
  const double c = std::cos(s0.omega * t);
  const double sn = std::sin(s0.omega * t);
  OscState s;
  s.q = s0.q * c + (s0.p / s0.omega) * sn;
  s.p = s0.p * c - s0.omega * s0.q * sn;
  s.omega = s0.omega;
  return s;
}

Mat3 lax_L(const OscState& s) {
  validate(s);
  Mat3 L;
  const double wq = s.omega * s.q;
  L << s.p, wq, 0.0, wq, -s.p, 0.0, 0.0, 0.0, 1.0;
  return L;
}

Mat3 lax_M(double omega) {
  if (!(omega > 0.0)) throw std::invalid_argument("lax_M: omega must be > 0");
  Mat3 M;
  const double h = 0.5 * omega;
  M << 0.0, -h, 0.0, h, 0.0, 0.0, 0.0, 0.0, 0.0;
  return M;
}

Operation lax_M_operation(double omega) {
  const Mat3 M = lax_M(omega);
  Operation op(3, 1);
  for (int a = 0; a < 3; ++a)
    for (int j = 0; j < 3; ++j) op.coeff1(a, j) = M(a, j);
  return op;
}

Mat3 classical_lax_residual(const OscState& s) {
  const PhaseVelocity v = hamiltonian_vector_field(s);
  const double wdq = s.omega * v.dq;
  Mat3 dLdt;
  dLdt << v.dp, wdq, 0.0, wdq, -v.dp, 0.0, 0.0, 0.0, 0.0;
  const Mat3 L = lax_L(s);
  const Mat3 M = lax_M(s.omega);
  return dLdt - (M * L - L * M);
}

Eigen::Vector3d lax_eigenvalues(const OscState& s) {
  Eigen::SelfAdjointEigenSolver<Mat3> solver(lax_L(s));
  if (solver.info() != Eigen::Success) throw std::runtime_error("lax_eigenvalues: eigensolver failed");
  return solver.eigenvalues();
}

double phase_angle(const OscState& s) {
  validate(s);
  return std::atan2(s.omega * s.q, s.p);
}

AuxPair aux_functions(const OscState& s, Branch branch) {
  const double H = hamiltonian(s);
  if (H <= 0.0) throw std::domain_error("aux_functions: undefined at H = 0");
  const double theta = phase_angle(s);
  const double r = std::sqrt(2.0 * std::sqrt(2.0 * H));
  const double sgn = branch_sign(branch);
  return {sgn * r * std::cos(0.5 * theta), sgn * r * std::sin(0.5 * theta)};
}

AuxDerivativeResidual aux_derivative_residual(const OscState& s, Branch branch, double dt) {
  if (!(dt > 0.0)) throw std::invalid_argument("aux_derivative_residual: dt must be > 0");
  const double theta = phase_angle(s);
  constexpr double kCutMargin = 0.1;
  if (!(std::abs(theta) < M_PI - kCutMargin))
    throw std::domain_error("aux_derivative_residual: phase too close to the branch cut");

  const AuxPair a0 = aux_functions(s, branch);
  const AuxPair am = aux_functions(exact_trajectory(s, -dt), branch);
  const AuxPair ap = aux_functions(exact_trajectory(s, dt), branch);
  const double dplus = (ap.a_plus - am.a_plus) / (2.0 * dt);
  const double dminus = (ap.a_minus - am.a_minus) / (2.0 * dt);
  const double h = 0.5 * s.omega;
  return {dplus + h * a0.a_minus, dminus - h * a0.a_plus, dt};
}

int branch_crossings(const OscState& s0, double t) {
  const double theta0 = phase_angle(s0);
  const double twopi = 2.0 * M_PI;
  const auto wraps = [&](double x) { return static_cast<long long>(std::floor((x + M_PI) / twopi)); };
  return static_cast<int>(wraps(theta0 + s0.omega * t) - wraps(theta0));
}

}  // namespace oplax
