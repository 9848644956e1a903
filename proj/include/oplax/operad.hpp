#pragma once

#include "oplax/tensor.hpp"

namespace oplax {

/// Partial composition f ∘_slot g: plug g after the first `slot` inputs of f,
/// scaled by the Koszul sign (-1)^{slot·|g|}. Valid for 0 <= slot <= |f|;
/// the result has degree f.degree + g.degree - 1.
Operation partial_composition(const Operation& f, int slot, const Operation& g);

/// Total composition f • g = sum_{i=0}^{|f|} f ∘_i g.
Operation total_composition(const Operation& f, const Operation& g);

/// Gerstenhaber bracket [f,g] = f•g - (-1)^{|f||g|} g•f. Both degrees must be
/// >= 1; degree-0 operations are representable but deliberately not
/// bracketable (the |f| = -1 sign conventions are not worth carrying).
Operation gerstenhaber_bracket(const Operation& f, const Operation& g);

namespace kernels {

// The contraction kernel behind partial_composition, in a serial reference
// version and an OpenMP version. Both compute every output entry with the
// same per-entry arithmetic, so their results are bit-identical; tests check
// that and the benchmark compares their speed. The public entry point picks
// the parallel path once the output tensor is large enough to pay for it.
inline constexpr std::size_t kParallelGrain = 4096;

void partial_composition_serial(Operation& out, const Operation& f, int slot, const Operation& g);
void partial_composition_parallel(Operation& out, const Operation& f, int slot, const Operation& g);

}  // namespace kernels

}  // namespace oplax
