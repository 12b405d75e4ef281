#pragma once

// Exact valued-field backends.
//
// Both backends are computable subfields of an algebraically closed valued
// field; every algorithm in this library is field-agnostic, so working in
// them is sound. The residue field is ℚ in both cases.
//
//  * RATFUNC: ℚ(t) with the t-adic valuation. Value group ℤ.
//  * PUISEUX: truncated Puiseux series Σ c_e t^e, e ∈ ℚ, each carrying a
//    precision bound. Value group ℚ. Precision is propagated pessimistically
//    and operations raise PRECISION_EXHAUSTED instead of guessing. Elements
//    built from exact data (constants, t^e, sections) carry precision ∞;
//    literal zero is the exact element with no terms.

#include <iosfwd>
#include <string>
#include <utility>
#include <variant>
#include <vector>

#include "acvf/qpoly.hpp"
#include "acvf/rational.hpp"

namespace acvf {

enum class Backend { kRatFunc, kPuiseux };

std::string_view backend_name(Backend b);

/// Relative precision used when inverting an exact Puiseux series that is not
/// a monomial (the true inverse is an infinite series).
inline constexpr long kPuiseuxInversePrecision = 24;

/// Reduced fraction num/den in ℚ(t) with den monic.
struct RatFunc {
  QPoly num;
  QPoly den = QPoly::constant(1);
  friend bool operator==(const RatFunc&, const RatFunc&) = default;
};

struct PuiseuxTerm {
  Rational coeff;
  Rational exp;
  friend bool operator==(const PuiseuxTerm&, const PuiseuxTerm&) = default;
};

/// Terms sorted by strictly increasing exponent, no zero coefficients, every
/// exponent strictly below `prec` (∞ = exact).
struct Puiseux {
  std::vector<PuiseuxTerm> terms;
  GammaVal prec = GammaVal::infinity();
  friend bool operator==(const Puiseux&, const Puiseux&) = default;
};

class FieldElem {
 public:
  /// RATFUNC zero.
  FieldElem() : rep_(RatFunc{}) {}

  static FieldElem zero(Backend b);
  static FieldElem one(Backend b);
  static FieldElem from_rational(Backend b, const Rational& q);
  /// c·t^e. RATFUNC requires e ∈ ℤ (VALUE_GROUP otherwise).
  static FieldElem monomial(Backend b, const Rational& c, const Rational& e);
  /// Validating constructors; they normalize their input.
  static FieldElem ratfunc(QPoly num, QPoly den);
  /// Laurent polynomial Σ c_e t^e with integer exponents.
  static FieldElem laurent(const std::vector<std::pair<Rational, long>>& terms);
  static FieldElem puiseux(std::vector<PuiseuxTerm> terms, GammaVal prec);

  Backend backend() const {
    return std::holds_alternative<RatFunc>(rep_) ? Backend::kRatFunc
                                                 : Backend::kPuiseux;
  }
  const RatFunc& as_ratfunc() const { return std::get<RatFunc>(rep_); }
  const Puiseux& as_puiseux() const { return std::get<Puiseux>(rep_); }

  /// Zero test. Throws PRECISION_EXHAUSTED for a PUISEUX element that is
  /// zero only up to its precision.
  bool is_zero() const;
  /// Never throws: literal (exact) zero only.
  bool is_literal_zero() const;

  FieldElem operator-() const;
  friend FieldElem operator+(const FieldElem& a, const FieldElem& b);
  friend FieldElem operator-(const FieldElem& a, const FieldElem& b);
  friend FieldElem operator*(const FieldElem& a, const FieldElem& b);
  friend FieldElem operator/(const FieldElem& a, const FieldElem& b);
  FieldElem& operator+=(const FieldElem& o) { return *this = *this + o; }
  FieldElem& operator-=(const FieldElem& o) { return *this = *this - o; }
  FieldElem& operator*=(const FieldElem& o) { return *this = *this * o; }
  FieldElem inverse() const;
  FieldElem scaled(const Rational& q) const;
  /// Multiplication by t^e (exact; RATFUNC needs e ∈ ℤ).
  FieldElem shifted(const Rational& e) const;
  FieldElem pow(unsigned k) const;

  /// Structural equality of canonical representations.
  friend bool operator==(const FieldElem& a, const FieldElem& b) {
    return a.rep_ == b.rep_;
  }

  /// Standard notation, e.g. "t^-1 + 5" or "(1 + t)/(2 - t)".
  std::string pretty() const;

 private:
  explicit FieldElem(RatFunc r) : rep_(std::move(r)) {}
  explicit FieldElem(Puiseux p) : rep_(std::move(p)) {}
  std::variant<RatFunc, Puiseux> rep_;
};

std::ostream& operator<<(std::ostream& os, const FieldElem& x);

/// Valuation; ∞ iff x = 0.
GammaVal fe_val(const FieldElem& x);

/// Residue of a valuation-0 element (VAL_NONZERO otherwise).
Rational fe_residue(const FieldElem& x);

/// All terms of the expansion of x with exponent < cutoff.
/// RATFUNC requires cutoff ∈ ℤ.
FieldElem fe_section(const FieldElem& x, const Rational& cutoff);

/// Canonical representative of x modulo {y : val(y) ⋄ threshold}, where ⋄
/// is ">" when `strict`, else "≥". Keeps exponents < threshold (non-strict)
/// or ≤ threshold (strict). Works for any rational threshold on both
/// backends.
FieldElem fe_reduce_mod(const FieldElem& x, const Rational& threshold,
                        bool strict);

/// Whether e lies in the value group of the backend.
bool in_value_group(Backend b, const Rational& e);
void require_value_group(Backend b, const Rational& e);

/// Leading coefficient and exponent of a nonzero x (x = c·t^e·(1 + M)).
std::pair<Rational, Rational> leading_term(const FieldElem& x);

void require_same_backend(const FieldElem& a, const FieldElem& b);

/// Exact PUISEUX elements with exponents in (1/D)ℤ are Laurent polynomials in
/// s = t^{1/D}. These move between that picture and RATFUNC in s.
/// to_ratfunc_in_root: precondition exact with exponents in (1/D)ℤ.
FieldElem to_ratfunc_in_root(const FieldElem& x, const Integer& d);
/// from_ratfunc_in_root: precondition x is a Laurent polynomial in s.
FieldElem from_ratfunc_in_root(const FieldElem& x, const Integer& d);

}  // namespace acvf
