#pragma once

// Definable O-submodules of K^n in split form ⊕_i S_i·B_i, with S_i one of
// K, t^γO, t^γM or (0).
//
// Membership is read in the algebraically closed field: a point y lies in
// t^γM iff val(y) > γ, and t^γ·M ⊆ t^δ·O iff γ ≥ δ (the value group is
// dense there). For RATFUNC this identifies M with the ACVF module it
// defines, not with the discrete tO.

#include <cstddef>
#include <vector>

#include "acvf/matrix.hpp"

namespace acvf {

enum class Tag { kFree, kOShift, kMShift, kZero };

std::string_view tag_name(Tag t);

struct Component {
  Tag tag = Tag::kOShift;
  Rational gamma;  // used by the shift tags only
  friend bool operator==(const Component& a, const Component& b) {
    if (a.tag != b.tag) return false;
    return (a.tag != Tag::kOShift && a.tag != Tag::kMShift) || a.gamma == b.gamma;
  }
};

struct ModuleDesc {
  std::size_t n = 0;
  FieldMatrix basis;  // columns B_i
  std::vector<Component> signature;
  friend bool operator==(const ModuleDesc&, const ModuleDesc&) = default;
};

enum class DualMode { kO, kM };

struct Classification {
  std::size_t free = 0, o = 0, m = 0;
  friend bool operator==(const Classification&, const Classification&) = default;
};

struct ModulePredicates {
  bool g_closed = false, semilattice = false, lattice = false;
};

/// Validates shape and invertibility; reorders FREE, O, M, ZERO (stable).
ModuleDesc mod_make(FieldMatrix basis, std::vector<Component> signature);
ModuleDesc mod_canonical(const ModuleDesc& m);

Classification mod_classify(const ModuleDesc& m);
ModuleDesc mod_dual(const ModuleDesc& m, DualMode mode);
ModuleDesc mod_closure(const ModuleDesc& m);
ModulePredicates mod_predicates(const ModuleDesc& m);

/// max{γ : a ∈ t^γ·Λ} for a semi-lattice Λ; ∞ iff K·a ⊆ Λ.
GammaVal semilattice_val(const ModuleDesc& m, const FieldVector& a);

bool mod_member(const ModuleDesc& m, const FieldVector& x);
/// m1 ⊆ m2, decided on the generators of m1.
bool mod_leq(const ModuleDesc& m1, const ModuleDesc& m2);
bool mod_equal(const ModuleDesc& m1, const ModuleDesc& m2);

/// O^n in the standard basis.
ModuleDesc mod_standard(Backend b, std::size_t n);

}  // namespace acvf
