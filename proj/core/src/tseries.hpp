#pragma once

// Truncated Laurent series over ℚ with integer exponents and an absolute
// precision: every coefficient below `prec` is known. Internal engine for
// elimination; precision is tracked pessimistically like the PUISEUX backend
// but without its per-term map.

#include <algorithm>
#include <climits>
#include <vector>

#include "acvf/error.hpp"
#include "acvf/field.hpp"

namespace acvf::detail {

inline constexpr long kExact = LONG_MAX / 4;

inline long sat_add(long a, long b) {
  if (a >= kExact || b >= kExact) return kExact;
  return std::min(a + b, kExact);
}

struct TSer {
  long lo = 0;                // exponent of c[0]
  std::vector<Rational> c;    // c.front() and c.back() nonzero when nonempty
  long prec = kExact;

  bool exact() const { return prec >= kExact; }
  bool exact_zero() const { return c.empty() && exact(); }
  bool known() const { return !c.empty(); }
  /// True valuation is ≥ this.
  long vbound() const { return c.empty() ? prec : lo; }
  long hi() const { return lo + static_cast<long>(c.size()); }  // one past

  void normalize() {
    // Drop terms at or above prec, then trim zeros at both ends.
    if (!exact() && hi() > prec) c.resize(static_cast<std::size_t>(std::max(0L, prec - lo)));
    while (!c.empty() && c.back() == 0) c.pop_back();
    std::size_t k = 0;
    while (k < c.size() && c[k] == 0) ++k;
    if (k > 0) {
      c.erase(c.begin(), c.begin() + static_cast<std::ptrdiff_t>(k));
      lo += static_cast<long>(k);
    }
    if (c.empty()) lo = 0;
  }

  Rational coeff(long e) const {
    if (e < lo || e >= hi()) return Rational(0);
    return c[static_cast<std::size_t>(e - lo)];
  }

  static TSer monomial(const Rational& q, long e) {
    TSer s;
    if (q != 0) {
      s.lo = e;
      s.c = {q};
    }
    return s;
  }

  friend TSer operator+(const TSer& a, const TSer& b) {
    if (a.exact_zero()) return b;
    if (b.exact_zero()) return a;
    TSer out;
    out.prec = std::min(a.prec, b.prec);
    if (!a.known() && !b.known()) return out;
    long lo = LONG_MAX, hi = LONG_MIN;
    for (const TSer* s : {&a, &b}) {
      if (!s->known()) continue;
      lo = std::min(lo, s->lo);
      hi = std::max(hi, s->hi());
    }
    if (!out.exact()) hi = std::min(hi, out.prec);
    if (hi <= lo) return out;
    out.lo = lo;
    out.c.assign(static_cast<std::size_t>(hi - lo), Rational(0));
    for (const TSer* s : {&a, &b}) {
      for (std::size_t k = 0; k < s->c.size(); ++k) {
        const long e = s->lo + static_cast<long>(k);
        if (e >= hi) break;
        out.c[static_cast<std::size_t>(e - lo)] += s->c[k];
      }
    }
    out.normalize();
    return out;
  }

  TSer operator-() const {
    TSer out = *this;
    for (auto& x : out.c) x = -x;
    return out;
  }
  friend TSer operator-(const TSer& a, const TSer& b) { return a + (-b); }

  friend TSer operator*(const TSer& a, const TSer& b) {
    if (a.exact_zero() || b.exact_zero()) return TSer{};
    TSer out;
    out.prec = std::min(sat_add(a.vbound(), b.prec), sat_add(a.prec, b.vbound()));
    if (!a.known() || !b.known()) return out;
    out.lo = a.lo + b.lo;
    long hi = a.hi() + b.hi() - 1;
    if (!out.exact()) hi = std::min(hi, out.prec);
    if (hi <= out.lo) {
      out.lo = 0;
      return out;
    }
    out.c.assign(static_cast<std::size_t>(hi - out.lo), Rational(0));
    for (std::size_t i = 0; i < a.c.size(); ++i) {
      if (a.c[i] == 0) continue;
      for (std::size_t j = 0; j < b.c.size() && i + j < out.c.size(); ++j) {
        out.c[i + j] += a.c[i] * b.c[j];
      }
    }
    out.normalize();
    return out;
  }

  TSer shifted(long e) const {
    TSer out = *this;
    if (out.known()) out.lo += e;
    if (!out.exact()) out.prec += e;
    return out;
  }

  /// Inverse; an exact non-monomial is expanded up to absolute precision cap.
  TSer inverse(long cap) const {
    if (exact_zero()) raise(ErrorCode::kDivisionByZero, "inverse of zero");
    if (!known()) raise(ErrorCode::kPrecisionExhausted, "inverse of an unknown series");
    const long v = lo;
    TSer out;
    if (exact() && c.size() == 1) return monomial(1 / c[0], -v);
    out.prec = exact() ? cap : std::min(prec - 2 * v, cap);
    out.lo = -v;
    const long count = out.prec + v;
    if (count <= 0) {
      out.lo = 0;
      return out;
    }
    out.c.resize(static_cast<std::size_t>(count));
    const Rational inv0 = 1 / c[0];
    for (std::size_t k = 0; k < out.c.size(); ++k) {
      Rational acc = k == 0 ? Rational(1) : Rational(0);
      const std::size_t lim = std::min(k, c.size() - 1);
      for (std::size_t j = 1; j <= lim; ++j) acc -= c[j] * out.c[k - j];
      out.c[k] = acc * inv0;
    }
    out.normalize();
    return out;
  }

  /// Exact series of the terms below cutoff.
  TSer section(long cutoff) const {
    if (cutoff > prec) raise(ErrorCode::kPrecisionExhausted, "section beyond precision");
    TSer out = *this;
    out.prec = kExact;
    if (out.known() && out.hi() > cutoff) {
      out.c.resize(static_cast<std::size_t>(std::max(0L, cutoff - out.lo)));
      out.normalize();
    }
    return out;
  }

  bool operator==(const TSer&) const = default;
};

/// Expansion of a FieldElem in s = t^{1/d} (d = 1 for RATFUNC) with
/// absolute precision at most cap (in s-exponents); Laurent polynomials and
/// exact PUISEUX elements come out exact.
TSer to_series(const FieldElem& x, long d, long cap);
/// Inverse of to_series for an exact series.
FieldElem from_series(const TSer& s, Backend b, long d);

}  // namespace acvf::detail
