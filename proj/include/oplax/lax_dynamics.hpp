#pragma once

#include <Eigen/Dense>
#include <array>
#include <functional>
#include <string>

#include "oplax/oscillator.hpp"
#include "oplax/tensor.hpp"

namespace oplax {

/// The nine constants C1..C9 of the closed-form deformation family.
struct ParamVector {
  std::array<double, 9> values{};

  /// 1-based access matching the usual C_nu notation.
  double c(int nu) const { return values[static_cast<std::size_t>(nu - 1)]; }
  double& c(int nu) { return values[static_cast<std::size_t>(nu - 1)]; }
};

/// True iff C2^2 + C3^2 + C5^2 + C6^2 + C7^2 + C8^2 > 0; only such parameter
/// vectors produce a genuine operadic Lax representation (the others leave
/// the multiplication frozen).
bool representation_condition(const ParamVector& C);

/// Coordinate chart for anti-commutative structure constants on R^3.
/// Fixed component order (1-based tensor indices):
///   x1 = mu^1_23, x2 = mu^2_13, x3 = mu^1_31, x4 = mu^2_23,
///   x5 = mu^1_12, x6 = mu^2_12, x7 = mu^3_13, x8 = mu^3_23, x9 = mu^3_12.
/// Anti-commutativity is structural here: the embedding writes each mirrored
/// entry with the opposite sign.
struct AntiCommutativeCoords {
  std::array<double, 9> x{};

  double operator[](int i) const { return x[static_cast<std::size_t>(i)]; }
  double& operator[](int i) { return x[static_cast<std::size_t>(i)]; }

  double max_abs() const;
};

AntiCommutativeCoords operator-(const AntiCommutativeCoords& a, const AntiCommutativeCoords& b);

/// Chart -> full 27-entry tensor (all non-chart entries zero or mirrored).
StructureConstants embed_anticommutative(const AntiCommutativeCoords& x);

/// Full tensor -> chart (reads the nine defining entries; no symmetrization).
AntiCommutativeCoords project_anticommutative(const StructureConstants& mu);

/// Right-hand side of the operadic Lax equation for a binary multiplication,
/// mudot^i_jk = mu^s_jk M^i_s - M^s_j mu^i_sk - M^s_k mu^i_js,
/// written directly from the index formula. Works for any dimension.
StructureConstants general_lax_rhs(const StructureConstants& mu, const Operation& M);

/// Same right-hand side computed as the Gerstenhaber bracket [M, mu]; kept
/// as a second route so the two can be compared.
StructureConstants general_lax_rhs_bracket(const StructureConstants& mu, const Operation& M);

/// The 27 componentwise equations for dim 3 with the oscillator M,
/// transcribed term by term. Exists solely as an independent check against
/// general_lax_rhs.
StructureConstants tabulated_rhs(const StructureConstants& mu, double omega);

/// The reduced anti-commutative system in chart coordinates:
///   x1' = x2' = -(w/2)(x3 + x4),  x3' = x4' = (w/2)(x1 + x2),
///   x5' = -(w/2) x6, x6' = (w/2) x5, x7' = -(w/2) x8, x8' = (w/2) x7,
///   x9' = 0.
AntiCommutativeCoords anticommutative_rhs(const AntiCommutativeCoords& x, double omega);

/// Closed-form deformation family evaluated at a phase point:
///   x1 = C2 p - C3 wq - C4      x2 = C2 p - C3 wq + C4
///   x3 = C2 wq + C3 p - C1      x4 = C2 wq + C3 p + C1
///   x5 = C5 A+ + C6 A-          x6 = C5 A- - C6 A+
///   x7 = C7 A+ + C8 A-          x8 = C7 A- - C8 A+     x9 = C9
/// The auxiliary pair is only evaluated when one of C5..C8 is nonzero, so
/// H = 0 is allowed for parameter vectors that do not touch A±.
StructureConstants closed_form_mu(const ParamVector& C, const OscState& s, Branch branch);

/// closed_form_mu at time t along the exact flow from s0, with the branch
/// continued smoothly through the half-angle cut. This is the right function
/// to compare against a time integrator.
StructureConstants closed_form_mu_at(const ParamVector& C, const OscState& s0, double t,
                                     Branch initial = Branch::plus);

/// Central-difference time derivative of the closed-form family along the
/// exact flow minus the reduced right-hand side; zero up to O(dt^2) for every
/// parameter vector. Rejects points within 0.1 rad of the branch cut.
AntiCommutativeCoords closed_form_flow_residual(const ParamVector& C, const OscState& s0, double t,
                                                double dt = 1e-5);

/// 9x9 factor matrix of the closed-form flow residual: rows are indexed by
/// the parameter beta = 1..9, columns by the chart equation alpha = 1..9, and
/// residual_alpha = sum_beta C_beta * gamma(beta, alpha) for every C (the
/// residual is linear in the parameters). Rows 1, 4, 9 and column 9 are zero
/// for any path; every entry vanishes along the exact flow. Entries are built
/// from the same central-difference stencil as the residual:
///   G+w = p' + w^2 q, G-w = w(q' - p),
///   G+h = A+' + (w/2) A-, G-h = A-' - (w/2) A+.
struct GammaMatrix {
  Eigen::Matrix<double, 9, 9> m = Eigen::Matrix<double, 9, 9>::Zero();

  /// Contraction sum_beta C_beta gamma(beta, alpha), as chart coordinates.
  AntiCommutativeCoords contract(const ParamVector& C) const;
};

/// Gamma along an arbitrary phase path (used to show nonzero entries off the
/// Hamiltonian flow).
GammaMatrix gamma_from_path(const std::function<OscState(double)>& path, double t, double dt, Branch branch);

/// Gamma along the exact flow from s0.
GammaMatrix gamma_matrix(const OscState& s0, double t, double dt = 1e-5, Branch branch = Branch::plus);

/// Unique parameters reproducing mu0 at the seeding point q = 0, p = p0 > 0:
///   C1 = (mu^2_23 - mu^1_31)/2        C2 = (mu^2_13 + mu^1_23)/(2 p0)
///   C3 = (mu^2_23 + mu^1_31)/(2 p0)   C4 = (mu^2_13 - mu^1_23)/2
///   C5 = mu^1_12/sqrt(2 p0)           C6 = -mu^2_12/sqrt(2 p0)
///   C7 = mu^3_13/sqrt(2 p0)           C8 = -mu^3_23/sqrt(2 p0)
///   C9 = mu^3_12
/// Requires p0 > 0 and an anti-commutative mu0.
ParamVector solve_params(const StructureConstants& mu0, double p0);

enum class Rigidity { rigid, deformed };

std::string to_string(Rigidity r);

struct RigidityReport {
  Rigidity verdict = Rigidity::rigid;
  bool condition_satisfied = false;
  /// Max deviation of the time-varying chart coordinates (x9 is constant by
  /// construction and ignored) from their seed values over one period.
  double max_deviation = 0.0;
  std::string note;
};

/// Seeds the closed-form family from mu0 at (q, p) = (0, p0) and classifies:
/// deformed iff the representation condition holds and the family actually
/// moves over one period (sampled at 256 points, threshold 1e-9).
RigidityReport classify_rigidity(const StructureConstants& mu0, double p0, double omega);

inline constexpr double kRigidityThreshold = 1e-9;
inline constexpr int kRigiditySamples = 256;

}  // namespace oplax
