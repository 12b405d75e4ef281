#pragma once

// Lattices U·diag(t^γ)·O^n in K^n, U upper unitriangular, as points of the
// coset space B_n/B_n(O).

#include <cstddef>

#include "acvf/matrix.hpp"
#include "acvf/omodule.hpp"

namespace acvf {

struct LatticeCode {
  std::size_t n = 0;
  FieldMatrix U;
  QVector gamma;
  bool canonical = false;
  friend bool operator==(const LatticeCode&, const LatticeCode&) = default;
};

/// A lattice together with a nonzero point of Λ/MΛ, written in the canonical
/// basis columns of U·diag(t^γ).
struct TnCode {
  LatticeCode lattice;
  QVector residue_vector;
  friend bool operator==(const TnCode&, const TnCode&) = default;
};

/// Canonical code of A·O^n. SINGULAR_MATRIX unless A is invertible.
LatticeCode diagonalize(const FieldMatrix& a);

/// Validates (U, γ) and puts it in canonical form: every entry (i, j), i < j,
/// of U·diag(t^γ) equals its own section below γ_i.
LatticeCode lat_canon(const LatticeCode& l);

/// U·diag(t^γ).
FieldMatrix lat_basis(const LatticeCode& l);

bool lat_member(const LatticeCode& l, const FieldVector& x);
bool lat_equal(const LatticeCode& a, const LatticeCode& b);
const QVector& g_invariant(const LatticeCode& l);

ModuleDesc lat_dual(const LatticeCode& l, DualMode mode);

/// The lattice of an all-O_SHIFT module. NOT_SEMILATTICE otherwise.
LatticeCode lattice_of(const ModuleDesc& m);
/// The lattice as a module (canonical basis columns, O_SHIFT(γ_i)).
ModuleDesc module_of(const LatticeCode& l);

/// T_n code of the point x + MΛ; x must lie in Λ \ MΛ (VAL_NONZERO otherwise).
TnCode tn_code(const LatticeCode& l, const FieldVector& x);
bool tn_equal(const TnCode& a, const TnCode& b);

}  // namespace acvf
