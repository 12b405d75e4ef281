#pragma once

// Deciding whether a semi-lattice Λ ⊆ H_d comes from a stably dominated
// type: Λ is in the image iff the residue image
//   R(Λ) = {(res f_1(c), …, res f_n(c)) : c ∈ K^m, v(f(c)) ≥ 0 for f ∈ Λ},
// f_i a basis of Λ modulo its K-space part, lies in no finite union of
// proper subspaces.

#include <cstddef>
#include <cstdint>
#include <optional>
#include <string>
#include <vector>

#include "acvf/omodule.hpp"
#include "acvf/stcomp.hpp"

namespace acvf {

enum class Verdict { kYes, kNo, kUndecided };
std::string_view verdict_name(Verdict v);

/// Λ = ⊕_i t^{w_i}·O·(x − c)^i, with K·(x − c)^i where w_i is empty.
struct DiagonalForm {
  FieldElem center;
  std::vector<std::optional<Rational>> weights;
};

struct MembershipVerdict {
  Verdict verdict = Verdict::kUndecided;
  std::string method;  // "exact", "jd_witness" or "sampling"
  /// Points found; on YES their residue rows have full rank.
  std::vector<FieldVector> witnesses;
  QMatrix residues;
  /// Exact branch only.
  std::optional<DiagonalForm> diagonal;
  /// On NO: R(Λ) is empty, or every residue vector has zero coordinate
  /// (in the diagonal basis t^{w_i}(x − c)^i) at each listed exponent i.
  bool empty_image = false;
  std::vector<unsigned> forced_zero;
  std::string reason;
};

/// Residue vector of a point in the basis of Λ modulo its K-space part
/// (O components in canonical order); nullopt when the point violates
/// v(f(c)) ≥ 0 for some f ∈ Λ.
std::optional<QVector> residue_vector(const ModuleDesc& l, const PolySpace& h, const FieldVector& point);

/// Recomputes every residue vector; true iff all points are admissible and
/// the vectors have rank n.
bool verify_witnesses(const ModuleDesc& l, const PolySpace& h, const std::vector<FieldVector>& points);

/// Λ written as a diagonal module in a shifted-power basis, if it is one
/// (one variable only; the center is found from Λ's own basis).
std::optional<DiagonalForm> diagonal_form(const ModuleDesc& l, const PolySpace& h);

MembershipVerdict appendix_member(const ModuleDesc& l, const PolySpace& h, std::size_t budget,
                                  std::uint64_t seed);

}  // namespace acvf
