#pragma once

// Congruence subgroups of the unipotent group U_n, canonical coset
// representatives, the groups D_ν attached to Γ-types, and equivalence of
// germs of lattice families t ↦ b·diag(t^{t_i})·O^n.

#include <cstddef>
#include <vector>

#include "acvf/gammatype.hpp"
#include "acvf/matrix.hpp"

namespace acvf {

struct Threshold {
  enum class Kind { kFinite, kPosInf, kNegInf };
  Kind kind = Kind::kFinite;
  Rational alpha;  // meaningful for kFinite
  bool strict = false;

  static Threshold finite(const Rational& a, bool strict = false) { return {Kind::kFinite, a, strict}; }
  static Threshold pos_inf() { return {Kind::kPosInf, 0, false}; }
  static Threshold neg_inf() { return {Kind::kNegInf, 0, false}; }
  friend bool operator==(const Threshold&, const Threshold&) = default;
};

/// Whether val(x) ⋄ α. +∞ admits only 0, −∞ admits everything.
bool threshold_admits(const Threshold& th, const GammaVal& v);

/// H = {a ∈ U_n : val(a_ij) ⋄_ij α_ij for i < j}.
class CongruenceSubgroup {
 public:
  CongruenceSubgroup() = default;
  /// All thresholds start at ≥ 0, i.e. U_n(O).
  explicit CongruenceSubgroup(std::size_t n);

  std::size_t n() const { return n_; }
  const Threshold& at(std::size_t i, std::size_t j) const;
  void set(std::size_t i, std::size_t j, Threshold th);
  friend bool operator==(const CongruenceSubgroup&, const CongruenceSubgroup&) = default;

 private:
  std::size_t index(std::size_t i, std::size_t j) const;
  std::size_t n_ = 0;
  std::vector<Threshold> th_;  // row-major over i < j
};

bool cs_group_check(const CongruenceSubgroup& h);
bool cs_member(const FieldMatrix& a, const CongruenceSubgroup& h);
bool cs_coset_equal(const FieldMatrix& a, const FieldMatrix& b, const CongruenceSubgroup& h);
/// Canonical representative of aH.
FieldMatrix cs_coset_code(const FieldMatrix& a, const CongruenceSubgroup& h);

/// {g ∈ U_n : val(g_ij) ≥ t_i − t_j for generic t ⊨ r}.
CongruenceSubgroup dnu(const GammaType& r);

struct GermPair {
  GammaType r;
  FieldMatrix b;  // upper triangular, invertible
};

bool germ_equiv(const GermPair& p1, const GermPair& p2);

}  // namespace acvf
