#pragma once

// Definable types on Γ^n over ℚ, given by a generic point in a lexicographic
// ℚ-vector space with infinite scales ω₁ ≫ … ≫ ω_k ≫ 1 ≫ ε₁ ≫ … ≫ ε_l > 0.
//
// A coordinate is a row of coefficients over (ω₁…ω_k, 1, ε₁…ε_l) and compares
// lexicographically. By quantifier elimination in DOAG the type of the point
// is fixed by the signs of all ℚ-affine functions of it, which is exactly
// what the canonical form keeps.

#include <cstddef>
#include <optional>
#include <utility>

#include "acvf/matrix.hpp"

namespace acvf {

struct GammaPoint {
  std::size_t n = 0;
  std::size_t inf = 0;  // ω scales
  std::size_t eps = 0;  // ε scales
  QMatrix coeffs;       // n × (inf + 1 + eps)

  std::size_t width() const { return inf + 1 + eps; }
  std::size_t std_col() const { return inf; }
  friend bool operator==(const GammaPoint&, const GammaPoint&) = default;
};

/// A type, kept as the (possibly non-canonical) point it was built from.
struct GammaType {
  GammaPoint point;
};

/// Element of the scale space: coefficients over (ω…, 1, ε…).
using ScaleElem = QVector;

/// Validates shape.
GammaType gt_make(std::size_t inf, std::size_t eps, QMatrix coeffs);
/// Constant type at a rational point.
GammaType gt_constant(const QVector& c);

/// Canonical representative: zero scale columns removed, each scale block
/// reduced to column echelon form by order-preserving re-bases, pivots ±1.
GammaPoint gt_canonical(const GammaType& p);
bool gt_equal(const GammaType& p, const GammaType& q);

/// Type of A·x + c for x ⊨ p.
GammaType gt_push(const GammaType& p, const QMatrix& a, const QVector& c);
/// (x, y) with y ⊨ q and x ⊨ p over y: p's scales dominate q's.
GammaType gt_product(const GammaType& p, const GammaType& q);
/// Limit in ℚ^n when every coordinate stays bounded.
std::optional<QVector> gt_limit(const GammaType& p);

struct Decomposition {
  QMatrix T;          // invertible n×n over ℚ
  std::size_t finite = 0;  // rows [0, finite) of T·x have limits
};
Decomposition gt_decompose(const GammaType& p);

/// c = −(standard part of the stored point); p0 = p translated by c.
std::pair<QVector, GammaType> gt_translate0(const GammaType& p);

bool gt_stab_member(const GammaType& r, const QVector& c);
/// Basis (as columns) of the rational translations fixing r.
QMatrix gt_stabilizer_basis(const GammaType& r);

/// The generic value of a·x + b for x ⊨ p, as a scale-space element of the
/// canonical point.
ScaleElem gt_affine_value(const GammaPoint& canonical, const QVector& a, const Rational& b);
/// Lexicographic sign: −1, 0 or 1.
int scale_sign(const ScaleElem& x);
/// Lexicographic comparison.
bool scale_less(const ScaleElem& x, const ScaleElem& y);

}  // namespace acvf
