#pragma once

#include <gmpxx.h>

#include <compare>
#include <functional>
#include <ostream>
#include <string>
#include <string_view>

namespace acvf {

/// Exact rational number, always kept in lowest terms with positive
/// denominator. Houses value-group elements and residue-field scalars.
using Rational = mpq_class;
using Integer = mpz_class;

/// Parses "p/q" or "p". Throws Error(kMalformed) on bad syntax or q = 0.
Rational parse_rational(std::string_view text);

/// "p/q", or "p" when the denominator is 1.
std::string to_string(const Rational& q);

Integer floor(const Rational& q);
Integer ceil(const Rational& q);
bool is_integer(const Rational& q);

/// Rational <=> Rational; mpq_class only ships the legacy relational set.
inline std::strong_ordering compare(const Rational& a, const Rational& b) {
  const int c = cmp(a, b);
  return c < 0 ? std::strong_ordering::less
               : (c > 0 ? std::strong_ordering::greater
                        : std::strong_ordering::equal);
}

struct RationalLess {
  bool operator()(const Rational& a, const Rational& b) const {
    return cmp(a, b) < 0;
  }
};

/// Element of Γ ∪ {∞} with Γ ⊆ ℚ.
class GammaVal {
 public:
  GammaVal() : infinite_(true) {}
  GammaVal(Rational v) : infinite_(false), value_(std::move(v)) {}  // NOLINT
  GammaVal(long v) : infinite_(false), value_(v) {}                 // NOLINT

  static GammaVal infinity() { return GammaVal(); }

  bool is_infinite() const { return infinite_; }
  bool is_finite() const { return !infinite_; }

  /// Precondition: finite.
  const Rational& value() const;

  friend GammaVal operator+(const GammaVal& a, const GammaVal& b) {
    if (a.infinite_ || b.infinite_) return infinity();
    return GammaVal(Rational(a.value_ + b.value_));
  }
  friend GammaVal operator-(const GammaVal& a, const Rational& b) {
    if (a.infinite_) return infinity();
    return GammaVal(Rational(a.value_ - b));
  }

  friend bool operator==(const GammaVal& a, const GammaVal& b) {
    if (a.infinite_ || b.infinite_) return a.infinite_ == b.infinite_;
    return a.value_ == b.value_;
  }
  friend std::strong_ordering operator<=>(const GammaVal& a,
                                          const GammaVal& b) {
    if (a.infinite_ || b.infinite_) {
      return static_cast<int>(a.infinite_) <=> static_cast<int>(b.infinite_);
    }
    return compare(a.value_, b.value_);
  }

 private:
  bool infinite_;
  Rational value_;
};

inline GammaVal min(const GammaVal& a, const GammaVal& b) {
  return b < a ? b : a;
}

/// "inf" or the rational string.
std::string to_string(const GammaVal& g);
GammaVal parse_gamma_val(std::string_view text);

std::ostream& operator<<(std::ostream& os, const GammaVal& g);

}  // namespace acvf
