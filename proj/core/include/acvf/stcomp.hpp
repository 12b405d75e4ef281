#pragma once

// Polydisc (Gauss) types, the maps J_d into semi-lattices of polynomial
// space, tropical evaluation, and integration of lattice families along
// Γ-types.

#include <cstddef>
#include <map>
#include <optional>
#include <vector>

#include "acvf/gammatype.hpp"
#include "acvf/lattice.hpp"
#include "acvf/omodule.hpp"

namespace acvf {

using Exponent = std::vector<unsigned>;

unsigned total_degree(const Exponent& e);

/// Degree ascending, then lexicographically descending.
struct GrlexLess {
  bool operator()(const Exponent& a, const Exponent& b) const;
};

/// Polynomial in x_1..x_n over K. No zero coefficients are stored.
struct Poly {
  std::size_t nvars = 0;
  std::map<Exponent, FieldElem, GrlexLess> terms;
  friend bool operator==(const Poly&, const Poly&) = default;
};

Poly poly_add_term(Poly f, const Exponent& e, const FieldElem& c);
/// f(x + a): the coefficients c'_α of the expansion Σ c'_α (x − a)^α.
Poly poly_recenter(const Poly& f, const FieldVector& a);
FieldElem poly_eval(const Poly& f, const FieldVector& s);
unsigned poly_degree(const Poly& f);

/// Polynomials of total degree ≤ d in n variables, monomial basis in grlex
/// order.
struct PolySpace {
  std::size_t nvars = 0;
  unsigned degree = 0;
  std::vector<Exponent> monomials() const;
  std::size_t dim() const;
  friend bool operator==(const PolySpace&, const PolySpace&) = default;
};

FieldVector poly_coords(const Poly& f, const PolySpace& h, Backend b);
Poly coords_poly(const FieldVector& v, const PolySpace& h);

/// Generic type of Π {x_i : val(x_i − center_i) ≥ radii_i}.
struct MonomialType {
  FieldVector center;
  QVector radii;
};

GammaVal gauss_val(const MonomialType& p, const Poly& f);

/// A point of the polydisc where f attains its generic valuation:
/// center + t^radii·u with u from the simplex grid {u ∈ ℕ^n : |u| ≤ deg f}.
FieldVector gauss_witness(const MonomialType& p, const Poly& f);

/// Columns: the vectors (x − center)^α in monomial coordinates, for α in
/// grlex order. Upper unitriangular.
FieldMatrix shifted_power_basis(const PolySpace& h, const FieldVector& center);

/// {f ∈ H_d : generic valuation ≥ 0} as a canonical lattice code.
LatticeCode jd(const MonomialType& p, unsigned d);

GammaVal trop_h(const ModuleDesc& l, const FieldVector& b);
GammaVal trop_h(const LatticeCode& l, const FieldVector& b);

/// γ ↦ ⊕_α t^{w_α(γ)}·O·(x − center)^α with w(γ) = L·γ + c.
struct AffineLatticeFamily {
  PolySpace space;
  FieldVector center;
  QMatrix L;  // dim × m
  QVector c;  // dim
};

struct IntegralType {
  GammaType r;
  AffineLatticeFamily family;
};

/// Semi-lattice of the family at a rational parameter.
ModuleDesc family_at(const AffineLatticeFamily& f, const QVector& gamma);

/// Generic valuation of f under ∫_r: lexicographic minimum over α of
/// val(c'_α) − w_α(γ) at γ ⊨ r, as a one-dimensional point over r's
/// canonical scales. nullopt when f = 0.
std::optional<GammaType> integrate_val(const IntegralType& q, const Poly& f);

struct Recovered {
  GammaType r;
  AffineLatticeFamily family;  // identity weight map
};

/// Reparameterizes ∫_r f by its weight vector restricted to degree ≤ d.
/// NOT_INJECTIVE unless the weight map is injective on the directions r
/// moves in.
Recovered recover(const IntegralType& q, unsigned d);

}  // namespace acvf
