#include "oplax/algebras.hpp"

#include <cmath>
#include <stdexcept>

namespace oplax {

namespace {

void require_mu_shape(const StructureConstants& mu) {
  if (mu.dim() != 3 || mu.degree() != 2)
    throw std::invalid_argument("expected dim-3 degree-2 structure constants");
}

StructureConstants from_brackets(std::initializer_list<std::array<int, 4>> entries) {
  // Each entry {i, j, k, v} sets mu^i_jk = v and mu^i_kj = -v (1-based).
  StructureConstants mu(3, 2);
  for (const auto& e : entries) {
    mu.coeff2(e[0] - 1, e[1] - 1, e[2] - 1) = static_cast<double>(e[3]);
    mu.coeff2(e[0] - 1, e[2] - 1, e[1] - 1) = -static_cast<double>(e[3]);
  }
  return mu;
}

}  // namespace

double check_anticommutative(const StructureConstants& mu) {
  require_mu_shape(mu);
  double r = 0.0;
  for (int i = 0; i < 3; ++i)
    for (int j = 0; j < 3; ++j)
      for (int k = 0; k < 3; ++k) r = std::max(r, std::abs(mu.coeff2(i, j, k) + mu.coeff2(i, k, j)));
  return r;
}

double check_jacobi(const StructureConstants& mu) {
  require_mu_shape(mu);
  double r = 0.0;
  for (int i = 0; i < 3; ++i)
    for (int j = 0; j < 3; ++j)
      for (int k = 0; k < 3; ++k)
        for (int l = 0; l < 3; ++l) {
          double acc = 0.0;
          for (int s = 0; s < 3; ++s) {
            acc += mu.coeff2(s, j, k) * mu.coeff2(i, s, l);
            acc += mu.coeff2(s, k, l) * mu.coeff2(i, s, j);
            acc += mu.coeff2(s, l, j) * mu.coeff2(i, s, k);
          }
          r = std::max(r, std::abs(acc));
        }
  return r;
}

AlgebraDef builtin(std::string_view name) {
  AlgebraDef def;
  def.name = std::string(name);
  if (name == "so3") {
    // [e1,e2] = e3, [e2,e3] = e1, [e3,e1] = e2
    def.constants = from_brackets({{{1, 2, 3, 1}}, {{2, 3, 1, 1}}, {{3, 1, 2, 1}}});
    def.expected_rigidity = Rigidity::rigid;
  } else if (name == "heisenberg") {
    // [e1,e2] = e3
    def.constants = from_brackets({{{3, 1, 2, 1}}});
    def.expected_rigidity = Rigidity::rigid;
  } else if (name == "sl2") {
    // [e1,e2] = e3, [e3,e1] = 2 e1, [e2,e3] = 2 e2
    def.constants = from_brackets({{{3, 1, 2, 1}}, {{1, 3, 1, 2}}, {{2, 2, 3, 2}}});
    def.expected_rigidity = Rigidity::deformed;
  } else {
    throw std::invalid_argument("unknown builtin algebra '" + std::string(name) +
                                "' (expected so3, heisenberg or sl2)");
  }
  return def;
}

std::vector<AlgebraDef> all_builtins() { return {builtin("so3"), builtin("heisenberg"), builtin("sl2")}; }

double check_isomorphism(const StructureConstants& mu, const StructureConstants& mu0, const IsoMatrix& A) {
  require_mu_shape(mu);
  require_mu_shape(mu0);
  if (std::abs(A.determinant()) <= kSingularDetTol)
    throw std::domain_error("check_isomorphism: singular change-of-basis matrix");

  double r = 0.0;
  for (int i = 0; i < 3; ++i)
    for (int j = 0; j < 3; ++j)
      for (int k = 0; k < 3; ++k) {
        double lhs = 0.0;
        for (int s = 0; s < 3; ++s) lhs += mu.coeff2(s, j, k) * A(i, s);
        double rhs = 0.0;
        for (int l = 0; l < 3; ++l)
          for (int m = 0; m < 3; ++m) rhs += mu0.coeff2(i, l, m) * A(l, j) * A(m, k);
        r = std::max(r, std::abs(lhs - rhs));
      }
  return r;
}

IsoMatrix sl2_iso_matrix(const OscState& s, double p0) {
  if (!(p0 > 0.0)) throw std::domain_error("sl2_iso_matrix: p0 must be > 0");
  const double H = hamiltonian(s);
  if (H <= 0.0) throw std::domain_error("sl2_iso_matrix: H must be > 0");
  const double wq = s.omega * s.q;
  if (wq == 0.0) throw std::domain_error("sl2_iso_matrix: singular at q = 0");

  const double root = std::sqrt(2.0 * H);
  IsoMatrix A;
  A(0, 0) = (s.p + root) / wq;  // (2 p0 / wq)(p + sqrt(2H)) scaled by 1/(2 p0)
  A(0, 1) = 1.0;
  A(0, 2) = 0.0;
  A(1, 0) = (s.p - root) / (2.0 * p0);
  A(1, 1) = wq / (2.0 * p0);
  A(1, 2) = 0.0;
  A(2, 0) = 0.0;
  A(2, 1) = 0.0;
  A(2, 2) = root / p0;
  return A;
}

}  // namespace oplax
