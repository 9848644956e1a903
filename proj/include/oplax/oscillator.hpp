#pragma once

#include <Eigen/Dense>

#include "oplax/tensor.hpp"

namespace oplax {

using Mat3 = Eigen::Matrix3d;

/// Phase point of the harmonic oscillator with Hamiltonian
/// H(q,p) = (p^2 + omega^2 q^2)/2.
struct OscState {
  double q = 0.0;
  double p = 0.0;
  double omega = 1.0;
};

/// Sign choice for the auxiliary pair (A+, A-): both components are scaled by
/// the branch sign. `plus` is the branch with A+ > 0 at q = 0, p > 0.
enum class Branch : int { plus = 1, minus = -1 };

inline double branch_sign(Branch b) { return b == Branch::plus ? 1.0 : -1.0; }

struct AuxPair {
  double a_plus = 0.0;
  double a_minus = 0.0;
};

/// Residuals of the half-frequency relations dA+/dt + (omega/2) A- and
/// dA-/dt - (omega/2) A+, measured by central differences along the exact
/// flow; `dt` records the step used.
struct AuxDerivativeResidual {
  double g_plus = 0.0;
  double g_minus = 0.0;
  double dt = 0.0;
};

void validate(const OscState& s);

double hamiltonian(const OscState& s);

struct PhaseVelocity {
  double dq = 0.0;
  double dp = 0.0;
};

/// (dq/dt, dp/dt) = (p, -omega^2 q).
PhaseVelocity hamiltonian_vector_field(const OscState& s);

/// Closed-form flow: q(t) = q0 cos(wt) + (p0/w) sin(wt),
/// p(t) = p0 cos(wt) - w q0 sin(wt).
OscState exact_trajectory(const OscState& s0, double t);

/// L = [[p, wq, 0], [wq, -p, 0], [0, 0, 1]]; symmetric with spectrum
/// {+sqrt(2H), -sqrt(2H), 1}.
Mat3 lax_L(const OscState& s);

/// M = (w/2) [[0, -1, 0], [1, 0, 0], [0, 0, 0]]; constant and antisymmetric.
Mat3 lax_M(double omega);

/// M as a degree-1 operation on R^3 (same matrix entries).
Operation lax_M_operation(double omega);

/// dL/dt - (ML - LM) with dL/dt assembled from the Hamiltonian vector field;
/// identically zero entry-wise.
Mat3 classical_lax_residual(const OscState& s);

/// Eigenvalues of lax_L in ascending order.
Eigen::Vector3d lax_eigenvalues(const OscState& s);

/// Phase angle theta = atan2(wq, p) in (-pi, pi]; the auxiliary pair lives on
/// the half angle, so theta = pi is its branch cut.
double phase_angle(const OscState& s);

/// A+ = s·r·cos(theta/2), A- = s·r·sin(theta/2) with r = sqrt(2 sqrt(2H)) and
/// s the branch sign. Satisfies A+^2 + A-^2 = 2 sqrt(2H),
/// A+^2 - A-^2 = 2p and A+ A- = wq. Rejects H = 0.
AuxPair aux_functions(const OscState& s, Branch branch);

/// Central-difference check that A± rotate at frequency omega/2 along the
/// exact flow. Requires the phase to stay clear of the cut:
/// |theta| < pi - 0.1.
AuxDerivativeResidual aux_derivative_residual(const OscState& s, Branch branch, double dt = 1e-5);

/// Number of branch-cut crossings of the phase along the exact flow in
/// (0, t]; the smooth continuation of A± from t = 0 is the principal pair
/// times (-1)^crossings.
int branch_crossings(const OscState& s0, double t);

}  // namespace oplax
