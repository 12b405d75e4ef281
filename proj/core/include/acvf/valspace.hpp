#pragma once

// Finite-dimensional valued vector spaces K^n with the standard valuation
// v(x) = min_i v(x_i).

#include <cstddef>
#include <vector>

#include "acvf/matrix.hpp"

namespace acvf {

/// A separated family: v(Σ c_i a_i) = min_i (v(c_i) + v(a_i)) for all c.
struct SeparatedFamily {
  std::vector<FieldVector> vectors;
  /// Row j holds the coefficients of vectors[j] in the input family.
  FieldMatrix transform;
  /// Input indices that were linearly dependent on earlier inputs.
  std::vector<std::size_t> dropped;
};

GammaVal vv_val(const FieldVector& v);

/// Residue vector of v at level e: coefficient of t^e in each entry.
/// Precondition: vv_val(v) ≥ e.
QVector residue_at(const FieldVector& v, const Rational& e);

/// Separated basis of the span of `vectors` (same length, nonempty).
///
/// Inputs dependent on earlier ones are dropped first. Each remaining input
/// is then pushed up against the family built so far: while its leading
/// residue vector is a ℚ-combination of the leading residues of the family
/// members in its valuation class, subtract the matching combination. Since
/// the input is outside the span of the family, and a finite-dimensional
/// K-subspace is closed, its distance to the span is bounded and the loop
/// stops.
SeparatedFamily separate(const std::vector<FieldVector>& vectors);

/// v(Σ a_i ⊗ b_i) in U ⊗ V with standard valuations on both factors.
GammaVal tensor_val(const std::vector<std::pair<FieldVector, FieldVector>>& pairs);

}  // namespace acvf
