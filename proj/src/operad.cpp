#include "oplax/operad.hpp"

#include <cstdint>
#include <stdexcept>
#include <string>

namespace oplax {

namespace {

struct ComposeShape {
  int d = 0;
  int n_f = 0;        // degree of f
  int n_g = 0;        // degree of g
  int slot = 0;       // g is plugged after the first `slot` inputs of f
  double sign = 1.0;  // (-1)^{slot·|g|}
  std::size_t out_inputs = 0;   // d^(n_f + n_g - 1)
  std::size_t suffix_size = 0;  // d^(n_f - 1 - slot)
  std::size_t g_inputs = 0;     // d^{n_g}
  std::size_t f_inputs = 0;     // d^{n_f}
};

ComposeShape make_shape(const Operation& f, int slot, const Operation& g) {
  if (f.dim() != g.dim()) throw std::invalid_argument("partial_composition: dimension mismatch");
  if (slot < 0 || slot > f.reduced_degree())
    throw std::invalid_argument("partial_composition: slot " + std::to_string(slot) + " out of range [0, " +
                                std::to_string(f.reduced_degree()) + "]");
  ComposeShape s;
  s.d = f.dim();
  s.n_f = f.degree();
  s.n_g = g.degree();
  s.slot = slot;
  const bool odd = (slot % 2 != 0) && ((g.degree() - 1) % 2 != 0);
  s.sign = odd ? -1.0 : 1.0;
  s.out_inputs = detail::pow_int(s.d, s.n_f + s.n_g - 1);
  s.suffix_size = detail::pow_int(s.d, s.n_f - 1 - slot);
  s.g_inputs = detail::pow_int(s.d, s.n_g);
  s.f_inputs = detail::pow_int(s.d, s.n_f);
  return s;
}

// One output entry of f ∘_slot g. The flat output index decomposes as
// (a | prefix | g-digits | suffix); f is contracted with g over the plugged
// slot, a strided dot product of length d.
inline double compose_entry(const ComposeShape& s, std::span<const double> fc, std::span<const double> gc,
                            std::size_t flat) {
  const std::size_t d = static_cast<std::size_t>(s.d);
  const std::size_t a = flat / s.out_inputs;
  const std::size_t r = flat % s.out_inputs;

  const std::size_t suffix = r % s.suffix_size;
  const std::size_t g_digits = (r / s.suffix_size) % s.g_inputs;
  const std::size_t prefix = r / (s.suffix_size * s.g_inputs);

  const std::size_t f_stride = s.suffix_size;
  std::size_t f_base = a * s.f_inputs + prefix * (s.suffix_size * d) + suffix;
  std::size_t g_base = g_digits;

  double acc = 0.0;
  for (std::size_t sidx = 0; sidx < d; ++sidx) {
    acc += fc[f_base + sidx * f_stride] * gc[sidx * s.g_inputs + g_base];
  }
  return s.sign * acc;
}

}  // namespace

namespace kernels {

void partial_composition_serial(Operation& out, const Operation& f, int slot, const Operation& g) {
  const ComposeShape s = make_shape(f, slot, g);
  auto oc = out.coeffs();
  auto fc = f.coeffs();
  auto gc = g.coeffs();
  for (std::size_t flat = 0; flat < oc.size(); ++flat) oc[flat] = compose_entry(s, fc, gc, flat);
}

void partial_composition_parallel(Operation& out, const Operation& f, int slot, const Operation& g) {
  const ComposeShape s = make_shape(f, slot, g);
  auto oc = out.coeffs();
  auto fc = f.coeffs();
  auto gc = g.coeffs();
  const std::int64_t n = static_cast<std::int64_t>(oc.size());
#pragma omp parallel for schedule(static)
  for (std::int64_t flat = 0; flat < n; ++flat)
    oc[static_cast<std::size_t>(flat)] = compose_entry(s, fc, gc, static_cast<std::size_t>(flat));
}

}  // namespace kernels

Operation partial_composition(const Operation& f, int slot, const Operation& g) {
  if (f.dim() != g.dim()) throw std::invalid_argument("partial_composition: dimension mismatch");
  if (f.degree() < 1) throw std::invalid_argument("partial_composition: f must have degree >= 1");
  Operation out(f.dim(), f.degree() + g.degree() - 1);
  if (out.size() >= kernels::kParallelGrain) {
    kernels::partial_composition_parallel(out, f, slot, g);
  } else {
    kernels::partial_composition_serial(out, f, slot, g);
  }
  return out;
}

Operation total_composition(const Operation& f, const Operation& g) {
  if (f.dim() != g.dim()) throw std::invalid_argument("total_composition: dimension mismatch");
  if (f.degree() < 1) throw std::invalid_argument("total_composition: f must have degree >= 1");
  Operation acc = partial_composition(f, 0, g);
  for (int i = 1; i <= f.reduced_degree(); ++i) acc = linear_combine(1.0, acc, 1.0, partial_composition(f, i, g));
  return acc;
}

Operation gerstenhaber_bracket(const Operation& f, const Operation& g) {
  if (f.dim() != g.dim()) throw std::invalid_argument("gerstenhaber_bracket: dimension mismatch");
  if (f.degree() < 1 || g.degree() < 1)
    throw std::invalid_argument("gerstenhaber_bracket: degrees must be >= 1");
  const bool odd = (f.reduced_degree() % 2 != 0) && (g.reduced_degree() % 2 != 0);
  const double sign = odd ? -1.0 : 1.0;
  return linear_combine(1.0, total_composition(f, g), -sign, total_composition(g, f));
}

}  // namespace oplax
