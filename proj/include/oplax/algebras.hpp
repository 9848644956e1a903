#pragma once

#include <string>
#include <string_view>
#include <vector>

#include "oplax/lax_dynamics.hpp"
#include "oplax/oscillator.hpp"
#include "oplax/tensor.hpp"

namespace oplax {

struct AlgebraDef {
  std::string name;
  StructureConstants constants{3, 2};
  Rigidity expected_rigidity = Rigidity::rigid;
};

/// max_{i,j,k} |mu^i_jk + mu^i_kj|; zero for anti-commutative constants.
double check_anticommutative(const StructureConstants& mu);

/// max over basis index tuples of the Jacobi cyclic sum
/// sum_s mu^s_jk mu^i_sl + mu^s_kl mu^i_sj + mu^s_lj mu^i_sk;
/// zero exactly when the constants define a Lie algebra (given
/// anti-commutativity).
double check_jacobi(const StructureConstants& mu);

/// Builtin algebras: "so3", "heisenberg", "sl2". Constants are embedded as
/// data; fixture files mirror them for the CLI and loaders.
AlgebraDef builtin(std::string_view name);
std::vector<AlgebraDef> all_builtins();

using IsoMatrix = Eigen::Matrix3d;

/// Residual of the change-of-basis identity
/// max_{i,j,k} |sum_s mu^s_jk A^i_s - sum_{l,m} mu0^i_lm A^l_j A^m_k|.
/// Rejects a singular A.
double check_isomorphism(const StructureConstants& mu, const StructureConstants& mu0, const IsoMatrix& A);

/// The explicit matrix conjugating the deformed sl(2) multiplication back to
/// its seed constants:
///   A = 1/(2 p0) * [[2 p0 (p + sqrt(2H)) / (wq), 2 p0,  0],
///                   [p - sqrt(2H),               wq,    0],
///                   [0,                          0,     2 sqrt(2H)]]
/// Singular formula at q = 0; requires H > 0 and p0 > 0.
IsoMatrix sl2_iso_matrix(const OscState& s, double p0);

inline constexpr double kSingularDetTol = 1e-12;

}  // namespace oplax
