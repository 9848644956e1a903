#pragma once

#include <cstddef>
#include <initializer_list>
#include <span>
#include <vector>

namespace oplax {

// Dense storage is fine at the dimensions we care about (d = 3); the guard
// keeps accidental huge tensors out.
inline constexpr int kMaxDim = 8;

/// Element of the underlying vector space V = R^d.
class Vector {
public:
  explicit Vector(int dim);
  Vector(std::initializer_list<double> entries);

  /// Basis vector e_index (0-based index).
  static Vector basis(int dim, int index);

  int dim() const { return static_cast<int>(entries_.size()); }
  double& operator[](int i) { return entries_[static_cast<std::size_t>(i)]; }
  double operator[](int i) const { return entries_[static_cast<std::size_t>(i)]; }
  std::span<const double> entries() const { return entries_; }

private:
  std::vector<double> entries_;
};

/// Multilinear operation f: V^{⊗n} -> V stored as a dense coefficient array
/// f^a_{j1..jn}. `degree` is the arity n; the reduced degree |f| = n - 1
/// drives the Koszul signs of the operad structure. Layout is row-major with
/// the output index slowest, so a degree-2 operation reads as d stacked d x d
/// matrices. Coefficients are mutated only while an operation is being built;
/// everything downstream treats operations as immutable values.
class Operation {
public:
  Operation(int dim, int degree);

  int dim() const { return dim_; }
  int degree() const { return degree_; }
  int reduced_degree() const { return degree_ - 1; }

  std::span<const double> coeffs() const { return coeffs_; }
  std::span<double> coeffs() { return coeffs_; }

  std::size_t size() const { return coeffs_.size(); }

  /// Flat offset of f^out_{in[0]..in[n-1]} (all indices 0-based).
  std::size_t flat_index(int out, std::span<const int> in) const;

  double coeff(int out, std::span<const int> in) const;
  double& coeff(int out, std::span<const int> in);

  // Convenience accessors for the low degrees that dominate this codebase.
  double coeff1(int a, int j) const;
  double& coeff1(int a, int j);
  double coeff2(int a, int j, int k) const;
  double& coeff2(int a, int j, int k);

  bool same_shape(const Operation& other) const {
    return dim_ == other.dim_ && degree_ == other.degree_;
  }

  bool all_finite() const;

private:
  int dim_;
  int degree_;
  std::vector<double> coeffs_;
};

/// Structure constants mu^i_jk of a binary algebra are exactly a degree-2
/// operation; no separate representation is needed.
using StructureConstants = Operation;

/// v^a = sum f^a_{j1..jn} args1^{j1} ... argsn^{jn}.
Vector evaluate(const Operation& f, std::span<const Vector> args);
Vector evaluate(const Operation& f, std::initializer_list<Vector> args);

/// Degree-1 identity 1_V (Kronecker delta coefficients).
Operation identity_map(int dim);

/// Coefficient-wise a*f + b*g; shapes must match.
Operation linear_combine(double a, const Operation& f, double b, const Operation& g);

/// max_{indices} |f - g|, the residual norm used by every verification here.
double max_abs_diff(const Operation& f, const Operation& g);

/// max_{indices} |f|.
double max_abs(const Operation& f);

namespace detail {
std::size_t pow_int(int base, int exp);
}

}  // namespace oplax
