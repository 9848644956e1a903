#include "oplax/tensor.hpp"

#include <cmath>
#include <stdexcept>
#include <string>

namespace oplax {

namespace detail {

std::size_t pow_int(int base, int exp) {
  std::size_t r = 1;
  for (int i = 0; i < exp; ++i) r *= static_cast<std::size_t>(base);
  return r;
}

}  // namespace detail

namespace {

void check_dim(int dim) {
  if (dim < 1) throw std::invalid_argument("Vector/Operation dimension must be >= 1");
  if (dim > kMaxDim)
    throw std::invalid_argument("dimension " + std::to_string(dim) + " exceeds the dense-storage limit " +
                                std::to_string(kMaxDim));
}

}  // namespace

Vector::Vector(int dim) {
  check_dim(dim);
  entries_.assign(static_cast<std::size_t>(dim), 0.0);
}

Vector::Vector(std::initializer_list<double> entries) : entries_(entries) {
  check_dim(static_cast<int>(entries_.size()));
}

Vector Vector::basis(int dim, int index) {
  Vector v(dim);
  if (index < 0 || index >= dim) throw std::invalid_argument("basis index out of range");
  v[index] = 1.0;
  return v;
}

Operation::Operation(int dim, int degree) : dim_(dim), degree_(degree) {
  check_dim(dim);
  if (degree < 0) throw std::invalid_argument("Operation degree must be >= 0");
  coeffs_.assign(detail::pow_int(dim, degree + 1), 0.0);
}

std::size_t Operation::flat_index(int out, std::span<const int> in) const {
  if (static_cast<int>(in.size()) != degree_) throw std::invalid_argument("index arity mismatch");
  if (out < 0 || out >= dim_) throw std::invalid_argument("output index out of range");
  std::size_t idx = static_cast<std::size_t>(out);
  for (int j : in) {
    if (j < 0 || j >= dim_) throw std::invalid_argument("input index out of range");
    idx = idx * static_cast<std::size_t>(dim_) + static_cast<std::size_t>(j);
  }
  return idx;
}

double Operation::coeff(int out, std::span<const int> in) const { return coeffs_[flat_index(out, in)]; }

double& Operation::coeff(int out, std::span<const int> in) { return coeffs_[flat_index(out, in)]; }

double Operation::coeff1(int a, int j) const {
  const int in[] = {j};
  return coeff(a, in);
}

double& Operation::coeff1(int a, int j) {
  const int in[] = {j};
  return coeff(a, in);
}

double Operation::coeff2(int a, int j, int k) const {
  const int in[] = {j, k};
  return coeff(a, in);
}

double& Operation::coeff2(int a, int j, int k) {
  const int in[] = {j, k};
  return coeff(a, in);
}

bool Operation::all_finite() const {
  for (double c : coeffs_)
    if (!std::isfinite(c)) return false;
  return true;
}

Vector evaluate(const Operation& f, std::span<const Vector> args) {
  if (static_cast<int>(args.size()) != f.degree())
    throw std::invalid_argument("evaluate: expected " + std::to_string(f.degree()) + " arguments, got " +
                                std::to_string(args.size()));
  for (const Vector& a : args)
    if (a.dim() != f.dim()) throw std::invalid_argument("evaluate: argument dimension mismatch");

  const int d = f.dim();
  const int n = f.degree();
  const std::size_t inputs = detail::pow_int(d, n);
  const auto co = f.coeffs();

  Vector v(d);
  for (int a = 0; a < d; ++a) {
    double acc = 0.0;
    const std::size_t base = static_cast<std::size_t>(a) * inputs;
    for (std::size_t flat = 0; flat < inputs; ++flat) {
      double prod = co[base + flat];
      if (prod == 0.0) continue;
      std::size_t rest = flat;
      for (int pos = n - 1; pos >= 0; --pos) {
        prod *= args[static_cast<std::size_t>(pos)][static_cast<int>(rest % static_cast<std::size_t>(d))];
        rest /= static_cast<std::size_t>(d);
      }
      acc += prod;
    }
    v[a] = acc;
  }
  return v;
}

Vector evaluate(const Operation& f, std::initializer_list<Vector> args) {
  return evaluate(f, std::span<const Vector>(args.begin(), args.size()));
}

Operation identity_map(int dim) {
  Operation id(dim, 1);
  for (int a = 0; a < dim; ++a) id.coeff1(a, a) = 1.0;
  return id;
}

Operation linear_combine(double a, const Operation& f, double b, const Operation& g) {
  if (!f.same_shape(g)) throw std::invalid_argument("linear_combine: shape mismatch");
  Operation h(f.dim(), f.degree());
  auto out = h.coeffs();
  auto fc = f.coeffs();
  auto gc = g.coeffs();
  for (std::size_t i = 0; i < out.size(); ++i) out[i] = a * fc[i] + b * gc[i];
  return h;
}

double max_abs_diff(const Operation& f, const Operation& g) {
  if (!f.same_shape(g)) throw std::invalid_argument("max_abs_diff: shape mismatch");
  auto fc = f.coeffs();
  auto gc = g.coeffs();
  double m = 0.0;
  for (std::size_t i = 0; i < fc.size(); ++i) m = std::max(m, std::abs(fc[i] - gc[i]));
  return m;
}

double max_abs(const Operation& f) {
  double m = 0.0;
  for (double c : f.coeffs()) m = std::max(m, std::abs(c));
  return m;
}

}  // namespace oplax
