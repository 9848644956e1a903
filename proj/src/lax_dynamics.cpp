#include "oplax/lax_dynamics.hpp"

#include <cmath>
#include <stdexcept>

#include "oplax/algebras.hpp"
#include "oplax/operad.hpp"

namespace oplax {

namespace {

void require_mu_shape(const StructureConstants& mu) {
  if (mu.dim() != 3 || mu.degree() != 2)
    throw std::invalid_argument("expected dim-3 degree-2 structure constants");
}

constexpr double kAnticommutativeTol = 1e-12;

}  // namespace

bool representation_condition(const ParamVector& C) {
  const double s = C.c(2) * C.c(2) + C.c(3) * C.c(3) + C.c(5) * C.c(5) + C.c(6) * C.c(6) +
                   C.c(7) * C.c(7) + C.c(8) * C.c(8);
  return s > 0.0;
}

double AntiCommutativeCoords::max_abs() const {
  double m = 0.0;
  for (double v : x) m = std::max(m, std::abs(v));
  return m;
}

AntiCommutativeCoords operator-(const AntiCommutativeCoords& a, const AntiCommutativeCoords& b) {
  AntiCommutativeCoords r;
  for (int i = 0; i < 9; ++i) r[i] = a[i] - b[i];
  return r;
}

StructureConstants embed_anticommutative(const AntiCommutativeCoords& x) {
  StructureConstants mu(3, 2);
  // 1-based (i, j, k) of each chart coordinate; the mirror (i, k, j) gets the
  // opposite sign.
  auto set = [&mu](int i, int j, int k, double v) {
    mu.coeff2(i - 1, j - 1, k - 1) = v;
    mu.coeff2(i - 1, k - 1, j - 1) = -v;
  };
  set(1, 2, 3, x[0]);
  set(2, 1, 3, x[1]);
  set(1, 3, 1, x[2]);
  set(2, 2, 3, x[3]);
  set(1, 1, 2, x[4]);
  set(2, 1, 2, x[5]);
  set(3, 1, 3, x[6]);
  set(3, 2, 3, x[7]);
  set(3, 1, 2, x[8]);
  return mu;
}

AntiCommutativeCoords project_anticommutative(const StructureConstants& mu) {
  require_mu_shape(mu);
  auto m = [&mu](int i, int j, int k) { return mu.coeff2(i - 1, j - 1, k - 1); };
  AntiCommutativeCoords x;
  x[0] = m(1, 2, 3);
  x[1] = m(2, 1, 3);
  x[2] = m(1, 3, 1);
  x[3] = m(2, 2, 3);
  x[4] = m(1, 1, 2);
  x[5] = m(2, 1, 2);
  x[6] = m(3, 1, 3);
  x[7] = m(3, 2, 3);
  x[8] = m(3, 1, 2);
  return x;
}

StructureConstants general_lax_rhs(const StructureConstants& mu, const Operation& M) {
  if (mu.degree() != 2) throw std::invalid_argument("general_lax_rhs: mu must have degree 2");
  if (M.degree() != 1) throw std::invalid_argument("general_lax_rhs: M must have degree 1");
  if (mu.dim() != M.dim()) throw std::invalid_argument("general_lax_rhs: dimension mismatch");

  const int d = mu.dim();
  StructureConstants out(d, 2);
  for (int i = 0; i < d; ++i)
    for (int j = 0; j < d; ++j)
      for (int k = 0; k < d; ++k) {
        double acc = 0.0;
        for (int s = 0; s < d; ++s) {
          acc += mu.coeff2(s, j, k) * M.coeff1(i, s);
          acc -= M.coeff1(s, j) * mu.coeff2(i, s, k);
          acc -= M.coeff1(s, k) * mu.coeff2(i, j, s);
        }
        out.coeff2(i, j, k) = acc;
      }
  return out;
}

StructureConstants general_lax_rhs_bracket(const StructureConstants& mu, const Operation& M) {
  return gerstenhaber_bracket(M, mu);
}

StructureConstants tabulated_rhs(const StructureConstants& mu, double omega) {
  require_mu_shape(mu);
  const double w = 0.5 * omega;
  auto m = [&mu](int i, int j, int k) { return mu.coeff2(i - 1, j - 1, k - 1); };
  StructureConstants out(3, 2);
  auto set = [&out](int i, int j, int k, double v) { out.coeff2(i - 1, j - 1, k - 1) = v; };

  set(1, 1, 1, -w * (m(2, 1, 1) + m(1, 1, 2) + m(1, 2, 1)));
  set(1, 1, 2, -w * (m(2, 1, 2) - m(1, 1, 1) + m(1, 2, 2)));
  set(1, 2, 1, -w * (m(2, 2, 1) - m(1, 1, 1) + m(1, 2, 2)));
  set(1, 2, 2, -w * (m(2, 2, 2) - m(1, 1, 2) - m(1, 2, 1)));
  set(2, 1, 1, w * (m(1, 1, 1) - m(2, 1, 2) - m(2, 2, 1)));
  set(2, 1, 2, w * (m(1, 1, 2) + m(2, 1, 1) - m(2, 2, 2)));
  set(2, 2, 1, w * (m(1, 2, 1) + m(2, 1, 1) - m(2, 2, 2)));
  set(2, 2, 2, w * (m(1, 2, 2) + m(2, 1, 2) + m(2, 2, 1)));

  set(1, 1, 3, -w * (m(2, 1, 3) + m(1, 2, 3)));
  set(1, 2, 3, -w * (m(2, 2, 3) - m(1, 1, 3)));
  set(1, 3, 1, -w * (m(2, 3, 1) + m(1, 3, 2)));
  set(1, 3, 2, -w * (m(2, 3, 2) - m(1, 3, 1)));
  set(2, 1, 3, -w * (m(2, 2, 3) - m(1, 1, 3)));
  set(2, 2, 3, w * (m(2, 1, 3) + m(1, 2, 3)));
  set(2, 3, 1, -w * (m(2, 3, 2) - m(1, 3, 1)));
  set(2, 3, 2, w * (m(1, 3, 2) + m(2, 3, 1)));

  set(1, 3, 3, -w * m(2, 3, 3));
  set(2, 3, 3, w * m(1, 3, 3));
  set(3, 1, 3, -w * m(3, 2, 3));
  set(3, 2, 3, w * m(3, 1, 3));
  set(3, 2, 2, w * (m(3, 1, 2) + m(3, 2, 1)));
  set(3, 2, 1, w * (m(3, 1, 1) - m(3, 2, 2)));
  set(3, 1, 1, -w * (m(3, 2, 1) + m(3, 1, 2)));
  set(3, 1, 2, w * (m(3, 1, 1) - m(3, 2, 2)));
  set(3, 3, 2, w * m(3, 3, 1));
  set(3, 3, 1, -w * m(3, 3, 2));
  set(3, 3, 3, 0.0);
  return out;
}

AntiCommutativeCoords anticommutative_rhs(const AntiCommutativeCoords& x, double omega) {
  const double w = 0.5 * omega;
  AntiCommutativeCoords dx;
  dx[0] = -w * (x[2] + x[3]);
  dx[1] = -w * (x[2] + x[3]);
  dx[2] = w * (x[0] + x[1]);
  dx[3] = w * (x[0] + x[1]);
  dx[4] = -w * x[5];
  dx[5] = w * x[4];
  dx[6] = -w * x[7];
  dx[7] = w * x[6];
  dx[8] = 0.0;
  return dx;
}

namespace {

bool needs_aux(const ParamVector& C) {
  return C.c(5) != 0.0 || C.c(6) != 0.0 || C.c(7) != 0.0 || C.c(8) != 0.0;
}

AntiCommutativeCoords closed_form_coords(const ParamVector& C, const OscState& s, Branch branch) {
  validate(s);
  const double wq = s.omega * s.q;
  AntiCommutativeCoords x;
  x[0] = C.c(2) * s.p - C.c(3) * wq - C.c(4);
  x[1] = C.c(2) * s.p - C.c(3) * wq + C.c(4);
  x[2] = C.c(2) * wq + C.c(3) * s.p - C.c(1);
  x[3] = C.c(2) * wq + C.c(3) * s.p + C.c(1);
  if (needs_aux(C)) {
    const AuxPair a = aux_functions(s, branch);
    x[4] = C.c(5) * a.a_plus + C.c(6) * a.a_minus;
    x[5] = C.c(5) * a.a_minus - C.c(6) * a.a_plus;
    x[6] = C.c(7) * a.a_plus + C.c(8) * a.a_minus;
    x[7] = C.c(7) * a.a_minus - C.c(8) * a.a_plus;
  }
  x[8] = C.c(9);
  return x;
}

constexpr double kCutMargin = 0.1;

void require_clear_of_cut(const OscState& s) {
  if (!(std::abs(phase_angle(s)) < M_PI - kCutMargin))
    throw std::domain_error("phase too close to the auxiliary branch cut");
}

}  // namespace

StructureConstants closed_form_mu(const ParamVector& C, const OscState& s, Branch branch) {
  return embed_anticommutative(closed_form_coords(C, s, branch));
}

StructureConstants closed_form_mu_at(const ParamVector& C, const OscState& s0, double t, Branch initial) {
  const OscState st = exact_trajectory(s0, t);
  Branch b = initial;
  if (needs_aux(C) && branch_crossings(s0, t) % 2 != 0)
    b = (initial == Branch::plus) ? Branch::minus : Branch::plus;
  return closed_form_mu(C, st, b);
}

AntiCommutativeCoords closed_form_flow_residual(const ParamVector& C, const OscState& s0, double t,
                                                double dt) {
  if (!(dt > 0.0)) throw std::invalid_argument("closed_form_flow_residual: dt must be > 0");
  const OscState sm = exact_trajectory(s0, t - dt);
  const OscState sc = exact_trajectory(s0, t);
  const OscState sp = exact_trajectory(s0, t + dt);
  if (needs_aux(C)) {
    require_clear_of_cut(sm);
    require_clear_of_cut(sc);
    require_clear_of_cut(sp);
  }

  const AntiCommutativeCoords xm = closed_form_coords(C, sm, Branch::plus);
  const AntiCommutativeCoords xc = closed_form_coords(C, sc, Branch::plus);
  const AntiCommutativeCoords xp = closed_form_coords(C, sp, Branch::plus);
  const AntiCommutativeCoords rhs = anticommutative_rhs(xc, s0.omega);

  AntiCommutativeCoords r;
  for (int i = 0; i < 9; ++i) r[i] = (xp[i] - xm[i]) / (2.0 * dt) - rhs[i];
  return r;
}

AntiCommutativeCoords GammaMatrix::contract(const ParamVector& C) const {
  AntiCommutativeCoords r;
  for (int alpha = 0; alpha < 9; ++alpha) {
    double acc = 0.0;
    for (int beta = 0; beta < 9; ++beta) acc += C.values[static_cast<std::size_t>(beta)] * m(beta, alpha);
    r[alpha] = acc;
  }
  return r;
}

GammaMatrix gamma_from_path(const std::function<OscState(double)>& path, double t, double dt,
                            Branch branch) {
  if (!(dt > 0.0)) throw std::invalid_argument("gamma_from_path: dt must be > 0");
  const OscState sm = path(t - dt);
  const OscState sc = path(t);
  const OscState sp = path(t + dt);
  require_clear_of_cut(sm);
  require_clear_of_cut(sc);
  require_clear_of_cut(sp);

  const double w = sc.omega;
  const double qdot = (sp.q - sm.q) / (2.0 * dt);
  const double pdot = (sp.p - sm.p) / (2.0 * dt);
  const double g_plus_w = pdot + w * w * sc.q;
  const double g_minus_w = w * (qdot - sc.p);

  const AuxPair am = aux_functions(sm, branch);
  const AuxPair ac = aux_functions(sc, branch);
  const AuxPair ap = aux_functions(sp, branch);
  const double g_plus_h = (ap.a_plus - am.a_plus) / (2.0 * dt) + 0.5 * w * ac.a_minus;
  const double g_minus_h = (ap.a_minus - am.a_minus) / (2.0 * dt) - 0.5 * w * ac.a_plus;

  GammaMatrix gamma;
  auto& G = gamma.m;
  // Row = parameter index beta (0-based), column = chart equation alpha.
  G(1, 0) = G(1, 1) = g_plus_w;
  G(1, 2) = G(1, 3) = g_minus_w;
  G(2, 0) = G(2, 1) = -g_minus_w;
  G(2, 2) = G(2, 3) = g_plus_w;
  G(4, 4) = g_plus_h;
  G(4, 5) = g_minus_h;
  G(5, 4) = g_minus_h;
  G(5, 5) = -g_plus_h;
  G(6, 6) = g_plus_h;
  G(6, 7) = g_minus_h;
  G(7, 6) = g_minus_h;
  G(7, 7) = -g_plus_h;
  return gamma;
}

GammaMatrix gamma_matrix(const OscState& s0, double t, double dt, Branch branch) {
  return gamma_from_path([&s0](double tau) { return exact_trajectory(s0, tau); }, t, dt, branch);
}

ParamVector solve_params(const StructureConstants& mu0, double p0) {
  require_mu_shape(mu0);
  if (!(p0 > 0.0)) throw std::domain_error("solve_params: p0 must be > 0");
  if (check_anticommutative(mu0) > kAnticommutativeTol)
    throw std::invalid_argument("solve_params: structure constants are not anti-commutative");

  const AntiCommutativeCoords x = project_anticommutative(mu0);
  const double root = std::sqrt(2.0 * p0);
  ParamVector C;
  C.c(1) = 0.5 * (x[3] - x[2]);
  C.c(2) = (x[1] + x[0]) / (2.0 * p0);
  C.c(3) = (x[3] + x[2]) / (2.0 * p0);
  C.c(4) = 0.5 * (x[1] - x[0]);
  C.c(5) = x[4] / root;
  C.c(6) = -x[5] / root;
  C.c(7) = x[6] / root;
  C.c(8) = -x[7] / root;
  C.c(9) = x[8];
  return C;
}

std::string to_string(Rigidity r) { return r == Rigidity::rigid ? "rigid" : "deformed"; }

RigidityReport classify_rigidity(const StructureConstants& mu0, double p0, double omega) {
  if (!(omega > 0.0)) throw std::invalid_argument("classify_rigidity: omega must be > 0");
  const ParamVector C = solve_params(mu0, p0);
  const OscState s0{0.0, p0, omega};
  const AntiCommutativeCoords x0 = closed_form_coords(C, s0, Branch::plus);

  // Midpoint samples keep the grid clear of t = period/2, where the phase
  // sits exactly on the half-angle cut.
  const double period = 2.0 * M_PI / omega;
  double max_dev = 0.0;
  for (int k = 0; k < kRigiditySamples; ++k) {
    const double t = period * (static_cast<double>(k) + 0.5) / static_cast<double>(kRigiditySamples);
    const StructureConstants mu_t = closed_form_mu_at(C, s0, t, Branch::plus);
    const AntiCommutativeCoords xt = project_anticommutative(mu_t);
    // x9 is constant in time by construction; it carries no deformation
    // signal, so only the first eight chart coordinates are compared.
    for (int i = 0; i < 8; ++i) max_dev = std::max(max_dev, std::abs(xt[i] - x0[i]));
  }

  RigidityReport report;
  report.condition_satisfied = representation_condition(C);
  report.max_deviation = max_dev;
  if (report.condition_satisfied && max_dev > kRigidityThreshold) {
    report.verdict = Rigidity::deformed;
    report.note = "representation condition satisfied; the multiplication moves along the flow";
  } else if (!report.condition_satisfied) {
    report.verdict = Rigidity::rigid;
    report.note =
        "representation condition not satisfied; this seeding does not yield an operadic Lax "
        "representation";
  } else {
    report.verdict = Rigidity::rigid;
    report.note = "representation condition satisfied but no deviation detected over one period";
  }
  return report;
}

}  // namespace oplax
