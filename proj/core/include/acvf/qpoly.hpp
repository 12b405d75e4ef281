#pragma once

#include <cstddef>
#include <utility>
#include <vector>

#include "acvf/rational.hpp"

namespace acvf {

/// Dense univariate polynomial in t over ℚ, lowest degree first, with no
/// trailing zero coefficients (the zero polynomial has no coefficients).
class QPoly {
 public:
  QPoly() = default;
  explicit QPoly(std::vector<Rational> coeffs);
  static QPoly constant(const Rational& c);
  /// c·t^k
  static QPoly monomial(const Rational& c, std::size_t k);

  bool is_zero() const { return coeffs_.empty(); }
  /// Degree; -1 for zero.
  long degree() const { return static_cast<long>(coeffs_.size()) - 1; }
  /// Order of vanishing at t = 0. Precondition: nonzero.
  std::size_t ord() const;
  bool is_monomial() const;
  bool is_one() const;

  const std::vector<Rational>& coeffs() const { return coeffs_; }
  /// Coefficient of t^k (0 beyond the degree).
  Rational coeff(std::size_t k) const;
  const Rational& leading() const { return coeffs_.back(); }

  QPoly operator-() const;
  friend QPoly operator+(const QPoly& a, const QPoly& b);
  friend QPoly operator-(const QPoly& a, const QPoly& b);
  friend QPoly operator*(const QPoly& a, const QPoly& b);
  QPoly scaled(const Rational& c) const;
  QPoly shifted_up(std::size_t k) const;    // times t^k
  QPoly shifted_down(std::size_t k) const;  // exact division by t^k

  /// Euclidean division; precondition: divisor nonzero.
  static std::pair<QPoly, QPoly> divmod(const QPoly& a, const QPoly& b);
  /// Exact division; precondition: b divides a.
  static QPoly exact_div(const QPoly& a, const QPoly& b);
  /// Monic gcd; gcd(0, 0) = 0.
  static QPoly gcd(const QPoly& a, const QPoly& b);

  QPoly monic() const;

  /// First `count` coefficients of the power series a/b. Precondition: b(0) ≠ 0.
  static std::vector<Rational> series_quotient(const QPoly& a, const QPoly& b,
                                               std::size_t count);

  friend bool operator==(const QPoly& a, const QPoly& b) = default;

 private:
  void trim();
  std::vector<Rational> coeffs_;
};

}  // namespace acvf
