#include "acvf/field.hpp"

#include <algorithm>
#include <map>
#include <ostream>
#include <sstream>

#include "acvf/error.hpp"

namespace acvf {

namespace {

// ---------------------------------------------------------------- RATFUNC

RatFunc normalize(QPoly num, QPoly den) {
  require(!den.is_zero(), ErrorCode::kDivisionByZero, "zero denominator");
  if (num.is_zero()) return RatFunc{};
  if (!den.is_one()) {
    QPoly g = QPoly::gcd(num, den);
    if (!g.is_one()) {
      num = QPoly::exact_div(num, g);
      den = QPoly::exact_div(den, g);
    }
    if (den.leading() != 1) {
      const Rational inv = 1 / den.leading();
      num = num.scaled(inv);
      den = den.scaled(inv);
    }
  }
  return RatFunc{std::move(num), std::move(den)};
}

RatFunc rf_add(const RatFunc& a, const RatFunc& b) {
  if (a.num.is_zero()) return b;
  if (b.num.is_zero()) return a;
  if (a.den == b.den) return normalize(a.num + b.num, a.den);
  // Henrici: only the common factor of the denominators can cancel.
  QPoly g = QPoly::gcd(a.den, b.den);
  QPoly ad = QPoly::exact_div(a.den, g);
  QPoly bd = QPoly::exact_div(b.den, g);
  QPoly num = a.num * bd + b.num * ad;
  if (num.is_zero()) return RatFunc{};
  QPoly den = ad * b.den;
  if (!g.is_one()) {
    QPoly h = QPoly::gcd(num, g);
    if (!h.is_one()) {
      num = QPoly::exact_div(num, h);
      den = QPoly::exact_div(den, h);
    }
  }
  return RatFunc{std::move(num), std::move(den)};
}

RatFunc rf_mul(const RatFunc& a, const RatFunc& b) {
  if (a.num.is_zero() || b.num.is_zero()) return RatFunc{};
  QPoly g1 = QPoly::gcd(a.num, b.den);
  QPoly g2 = QPoly::gcd(b.num, a.den);
  QPoly num = QPoly::exact_div(a.num, g1) * QPoly::exact_div(b.num, g2);
  QPoly den = QPoly::exact_div(a.den, g2) * QPoly::exact_div(b.den, g1);
  return RatFunc{std::move(num), std::move(den)};
}

RatFunc rf_inverse(const RatFunc& a) {
  require(!a.num.is_zero(), ErrorCode::kDivisionByZero, "inverse of zero");
  const Rational inv = 1 / a.num.leading();
  return RatFunc{a.den.scaled(inv), a.num.scaled(inv)};
}

long rf_val(const RatFunc& a) {
  return static_cast<long>(a.num.ord()) - static_cast<long>(a.den.ord());
}

/// Expansion coefficients of a at exponents val..cutoff-1.
std::vector<std::pair<Rational, long>> rf_expand(const RatFunc& a, long cutoff) {
  std::vector<std::pair<Rational, long>> out;
  if (a.num.is_zero()) return out;
  const std::size_t on = a.num.ord();
  const std::size_t od = a.den.ord();
  const long v = static_cast<long>(on) - static_cast<long>(od);
  if (cutoff <= v) return out;
  const auto count = static_cast<std::size_t>(cutoff - v);
  std::vector<Rational> s;
  const QPoly n0 = a.num.shifted_down(on);
  const QPoly d0 = a.den.shifted_down(od);
  if (d0.is_one()) {
    s.resize(count);
    for (std::size_t i = 0; i < count; ++i) s[i] = n0.coeff(i);
  } else {
    s = QPoly::series_quotient(n0, d0, count);
  }
  for (std::size_t i = 0; i < count; ++i) {
    if (s[i] != 0) out.emplace_back(s[i], v + static_cast<long>(i));
  }
  return out;
}

RatFunc rf_from_laurent(const std::vector<std::pair<Rational, long>>& terms) {
  if (terms.empty()) return RatFunc{};
  long lo = 0;
  long hi = 0;
  for (const auto& [c, e] : terms) {
    lo = std::min(lo, e);
    hi = std::max(hi, e);
  }
  std::vector<Rational> coeffs(static_cast<std::size_t>(hi - lo + 1));
  for (const auto& [c, e] : terms) coeffs[static_cast<std::size_t>(e - lo)] += c;
  QPoly num(std::move(coeffs));
  QPoly den = QPoly::monomial(1, static_cast<std::size_t>(-lo));
  return normalize(std::move(num), std::move(den));
}

// ---------------------------------------------------------------- PUISEUX

bool pu_is_exact(const Puiseux& p) { return p.prec.is_infinite(); }

/// Lower bound on the valuation: first exponent, or the precision when no
/// term is known.
GammaVal pu_val_bound(const Puiseux& p) {
  if (!p.terms.empty()) return GammaVal(p.terms.front().exp);
  return p.prec;
}

Puiseux pu_from_map(const std::map<Rational, Rational, RationalLess>& m,
                    const GammaVal& prec) {
  Puiseux out;
  out.prec = prec;
  for (const auto& [e, c] : m) {
    if (c == 0) continue;
    if (GammaVal(e) >= prec) break;
    out.terms.push_back({c, e});
  }
  return out;
}

Puiseux pu_add(const Puiseux& a, const Puiseux& b) {
  std::map<Rational, Rational, RationalLess> m;
  for (const auto& t : a.terms) m[t.exp] += t.coeff;
  for (const auto& t : b.terms) m[t.exp] += t.coeff;
  return pu_from_map(m, min(a.prec, b.prec));
}

Puiseux pu_neg(Puiseux a) {
  for (auto& t : a.terms) t.coeff = -t.coeff;
  return a;
}

Puiseux pu_mul(const Puiseux& a, const Puiseux& b) {
  const bool a_zero = a.terms.empty() && pu_is_exact(a);
  const bool b_zero = b.terms.empty() && pu_is_exact(b);
  if (a_zero || b_zero) return Puiseux{};
  const GammaVal prec =
      min(pu_val_bound(a) + b.prec, a.prec + pu_val_bound(b));
  std::map<Rational, Rational, RationalLess> m;
  for (const auto& x : a.terms) {
    for (const auto& y : b.terms) {
      Rational e = x.exp + y.exp;
      if (GammaVal(e) >= prec) continue;
      m[e] += x.coeff * y.coeff;
    }
  }
  return pu_from_map(m, prec);
}

Puiseux pu_inverse(const Puiseux& a) {
  if (a.terms.empty()) {
    if (pu_is_exact(a)) raise(ErrorCode::kDivisionByZero, "inverse of zero");
    raise(ErrorCode::kPrecisionExhausted,
          "inverse of a series with no known terms");
  }
  const Rational c0 = a.terms.front().coeff;
  const Rational v = a.terms.front().exp;
  // a = c0 t^v (1 + u), val(u) > 0.
  Puiseux u;
  for (std::size_t i = 1; i < a.terms.size(); ++i) {
    u.terms.push_back({a.terms[i].coeff / c0, a.terms[i].exp - v});
  }
  const GammaVal rel_prec =
      pu_is_exact(a) ? (u.terms.empty() ? GammaVal::infinity()
                                        : GammaVal(kPuiseuxInversePrecision))
                     : a.prec - v;
  u.prec = rel_prec;
  if (rel_prec.is_finite()) {
    std::erase_if(u.terms, [&](const PuiseuxTerm& t) {
      return GammaVal(t.exp) >= rel_prec;
    });
  }
  // 1/(1+u) = Σ (-u)^k, truncated at rel_prec.
  std::map<Rational, Rational, RationalLess> acc;
  acc[Rational(0)] = 1;
  if (!u.terms.empty()) {
    Puiseux neg_u = pu_neg(u);
    Puiseux power;
    power.terms.push_back({Rational(1), Rational(0)});
    power.prec = rel_prec;
    for (;;) {
      power = pu_mul(power, neg_u);
      power.prec = rel_prec;
      std::erase_if(power.terms, [&](const PuiseuxTerm& t) {
        return GammaVal(t.exp) >= rel_prec;
      });
      if (power.terms.empty()) break;
      for (const auto& t : power.terms) acc[t.exp] += t.coeff;
    }
  }
  Puiseux out;
  const GammaVal abs_prec = rel_prec - v;
  const Rational inv_c0 = 1 / c0;
  for (const auto& [e, c] : acc) {
    if (c == 0) continue;
    Rational ex = e - v;
    if (GammaVal(ex) >= abs_prec) continue;
    out.terms.push_back({c * inv_c0, ex});
  }
  out.prec = abs_prec;
  return out;
}

std::string term_string(const Rational& c, const std::string& exp_str,
                        bool first) {
  std::string s;
  Rational mag = c;
  if (!first) {
    s += c < 0 ? " - " : " + ";
    mag = abs(c);
  }
  if (exp_str == "0") return s + to_string(mag);
  std::string mono = exp_str == "1" ? "t" : "t^" + exp_str;
  if (mag == 1) return s + mono;
  if (mag == -1) return s + "-" + mono;
  return s + to_string(mag) + "*" + mono;
}

std::string qpoly_string(const QPoly& p, long shift) {
  if (p.is_zero()) return "0";
  std::string s;
  bool first = true;
  for (std::size_t i = 0; i < p.coeffs().size(); ++i) {
    if (p.coeffs()[i] == 0) continue;
    s += term_string(p.coeffs()[i],
                     std::to_string(static_cast<long>(i) + shift), first);
    first = false;
  }
  return s;
}

}  // namespace

std::string_view backend_name(Backend b) {
  return b == Backend::kRatFunc ? "ratfunc" : "puiseux";
}

bool in_value_group(Backend b, const Rational& e) {
  return b == Backend::kPuiseux || is_integer(e);
}

void require_value_group(Backend b, const Rational& e) {
  if (!in_value_group(b, e)) {
    raise(ErrorCode::kValueGroup,
          "exponent " + to_string(e) + " outside the value group of " +
              std::string(backend_name(b)));
  }
}

void require_same_backend(const FieldElem& a, const FieldElem& b) {
  if (a.backend() != b.backend()) {
    raise(ErrorCode::kBackendMismatch, "mixed field backends");
  }
}

FieldElem FieldElem::zero(Backend b) {
  return b == Backend::kRatFunc ? FieldElem(RatFunc{}) : FieldElem(Puiseux{});
}

FieldElem FieldElem::one(Backend b) { return from_rational(b, Rational(1)); }

FieldElem FieldElem::from_rational(Backend b, const Rational& q) {
  return monomial(b, q, Rational(0));
}

FieldElem FieldElem::monomial(Backend b, const Rational& c, const Rational& e) {
  require_value_group(b, e);
  if (c == 0) return zero(b);
  if (b == Backend::kRatFunc) {
    return FieldElem(rf_from_laurent({{c, e.get_num().get_si()}}));
  }
  Puiseux p;
  p.terms.push_back({c, e});
  return FieldElem(std::move(p));
}

FieldElem FieldElem::ratfunc(QPoly num, QPoly den) {
  return FieldElem(normalize(std::move(num), std::move(den)));
}

FieldElem FieldElem::laurent(
    const std::vector<std::pair<Rational, long>>& terms) {
  return FieldElem(rf_from_laurent(terms));
}

FieldElem FieldElem::puiseux(std::vector<PuiseuxTerm> terms, GammaVal prec) {
  std::map<Rational, Rational, RationalLess> m;
  for (auto& t : terms) {
    if (prec.is_finite() && GammaVal(t.exp) >= prec) {
      raise(ErrorCode::kMalformed,
            "Puiseux term at or above the precision bound");
    }
    m[t.exp] += t.coeff;
  }
  return FieldElem(pu_from_map(m, prec));
}

bool FieldElem::is_literal_zero() const {
  if (const auto* r = std::get_if<RatFunc>(&rep_)) return r->num.is_zero();
  const auto& p = std::get<Puiseux>(rep_);
  return p.terms.empty() && pu_is_exact(p);
}

bool FieldElem::is_zero() const {
  if (const auto* r = std::get_if<RatFunc>(&rep_)) return r->num.is_zero();
  const auto& p = std::get<Puiseux>(rep_);
  if (!p.terms.empty()) return false;
  if (pu_is_exact(p)) return true;
  raise(ErrorCode::kPrecisionExhausted,
        "Puiseux element is zero only up to precision " + to_string(p.prec));
}

FieldElem FieldElem::operator-() const {
  if (const auto* r = std::get_if<RatFunc>(&rep_)) {
    return FieldElem(RatFunc{-r->num, r->den});
  }
  return FieldElem(pu_neg(std::get<Puiseux>(rep_)));
}

FieldElem operator+(const FieldElem& a, const FieldElem& b) {
  require_same_backend(a, b);
  if (a.backend() == Backend::kRatFunc) {
    return FieldElem(rf_add(a.as_ratfunc(), b.as_ratfunc()));
  }
  return FieldElem(pu_add(a.as_puiseux(), b.as_puiseux()));
}

FieldElem operator-(const FieldElem& a, const FieldElem& b) { return a + (-b); }

FieldElem operator*(const FieldElem& a, const FieldElem& b) {
  require_same_backend(a, b);
  if (a.backend() == Backend::kRatFunc) {
    return FieldElem(rf_mul(a.as_ratfunc(), b.as_ratfunc()));
  }
  return FieldElem(pu_mul(a.as_puiseux(), b.as_puiseux()));
}

FieldElem FieldElem::inverse() const {
  if (const auto* r = std::get_if<RatFunc>(&rep_)) return FieldElem(rf_inverse(*r));
  return FieldElem(pu_inverse(std::get<Puiseux>(rep_)));
}

FieldElem operator/(const FieldElem& a, const FieldElem& b) {
  require_same_backend(a, b);
  return a * b.inverse();
}

FieldElem FieldElem::scaled(const Rational& q) const {
  if (q == 0) return zero(backend());
  if (const auto* r = std::get_if<RatFunc>(&rep_)) {
    return FieldElem(RatFunc{r->num.scaled(q), r->den});
  }
  Puiseux p = std::get<Puiseux>(rep_);
  for (auto& t : p.terms) t.coeff *= q;
  return FieldElem(std::move(p));
}

FieldElem FieldElem::shifted(const Rational& e) const {
  require_value_group(backend(), e);
  if (const auto* r = std::get_if<RatFunc>(&rep_)) {
    if (r->num.is_zero()) return *this;
    const long k = e.get_num().get_si();
    if (k >= 0) {
      return FieldElem(normalize(r->num.shifted_up(static_cast<std::size_t>(k)), r->den));
    }
    return FieldElem(normalize(r->num, r->den.shifted_up(static_cast<std::size_t>(-k))));
  }
  Puiseux p = std::get<Puiseux>(rep_);
  for (auto& t : p.terms) t.exp += e;
  if (p.prec.is_finite()) p.prec = GammaVal(Rational(p.prec.value() + e));
  return FieldElem(std::move(p));
}

FieldElem FieldElem::pow(unsigned k) const {
  FieldElem result = one(backend());
  FieldElem base = *this;
  while (k > 0) {
    if (k & 1U) result *= base;
    k >>= 1U;
    if (k > 0) base *= base;
  }
  return result;
}

std::string FieldElem::pretty() const {
  if (const auto* r = std::get_if<RatFunc>(&rep_)) {
    if (r->num.is_zero()) return "0";
    if (r->den.is_monomial()) {
      return qpoly_string(r->num, -static_cast<long>(r->den.degree()));
    }
    return "(" + qpoly_string(r->num, 0) + ")/(" + qpoly_string(r->den, 0) + ")";
  }
  const auto& p = std::get<Puiseux>(rep_);
  std::string s;
  bool first = true;
  for (const auto& t : p.terms) {
    s += term_string(t.coeff, to_string(t.exp), first);
    first = false;
  }
  if (p.prec.is_finite()) {
    s += (first ? "" : " + ") + std::string("O(t^") + to_string(p.prec.value()) + ")";
  } else if (first) {
    s = "0";
  }
  return s;
}

std::ostream& operator<<(std::ostream& os, const FieldElem& x) {
  return os << x.pretty();
}

GammaVal fe_val(const FieldElem& x) {
  if (x.backend() == Backend::kRatFunc) {
    const auto& r = x.as_ratfunc();
    if (r.num.is_zero()) return GammaVal::infinity();
    return GammaVal(rf_val(r));
  }
  const auto& p = x.as_puiseux();
  if (!p.terms.empty()) return GammaVal(p.terms.front().exp);
  if (pu_is_exact(p)) return GammaVal::infinity();
  raise(ErrorCode::kPrecisionExhausted,
        "valuation undetermined: no terms below precision " + to_string(p.prec));
}

std::pair<Rational, Rational> leading_term(const FieldElem& x) {
  const GammaVal v = fe_val(x);
  if (v.is_infinite()) raise(ErrorCode::kDivisionByZero, "leading term of zero");
  if (x.backend() == Backend::kRatFunc) {
    const auto& r = x.as_ratfunc();
    return {r.num.coeff(r.num.ord()) / r.den.coeff(r.den.ord()), v.value()};
  }
  const auto& t = x.as_puiseux().terms.front();
  return {t.coeff, t.exp};
}

Rational fe_residue(const FieldElem& x) {
  const GammaVal v = fe_val(x);
  if (v != GammaVal(0)) {
    raise(ErrorCode::kValNonzero, "residue needs valuation 0, got " + to_string(v));
  }
  return leading_term(x).first;
}

FieldElem fe_section(const FieldElem& x, const Rational& cutoff) {
  if (x.backend() == Backend::kRatFunc) {
    require_value_group(Backend::kRatFunc, cutoff);
    return FieldElem::laurent(rf_expand(x.as_ratfunc(), cutoff.get_num().get_si()));
  }
  const auto& p = x.as_puiseux();
  if (GammaVal(cutoff) > p.prec) {
    raise(ErrorCode::kPrecisionExhausted,
          "section at " + to_string(cutoff) + " beyond precision " + to_string(p.prec));
  }
  std::vector<PuiseuxTerm> kept;
  for (const auto& t : p.terms) {
    if (t.exp < cutoff) kept.push_back(t);
  }
  return FieldElem::puiseux(std::move(kept), GammaVal::infinity());
}

FieldElem fe_reduce_mod(const FieldElem& x, const Rational& threshold, bool strict) {
  if (x.backend() == Backend::kRatFunc) {
    const Integer cut = strict ? Integer(floor(threshold) + 1) : ceil(threshold);
    return fe_section(x, Rational(cut));
  }
  const auto& p = x.as_puiseux();
  const bool known = strict ? GammaVal(threshold) < p.prec : GammaVal(threshold) <= p.prec;
  if (!known) {
    raise(ErrorCode::kPrecisionExhausted,
          "reduction modulo t^" + to_string(threshold) + " beyond precision " +
              to_string(p.prec));
  }
  std::vector<PuiseuxTerm> kept;
  for (const auto& t : p.terms) {
    if (t.exp < threshold || (strict && t.exp == threshold)) kept.push_back(t);
  }
  return FieldElem::puiseux(std::move(kept), GammaVal::infinity());
}

FieldElem to_ratfunc_in_root(const FieldElem& x, const Integer& d) {
  std::vector<std::pair<Rational, long>> terms;
  for (const auto& term : x.as_puiseux().terms) {
    const Rational e = term.exp * d;
    require(is_integer(e), ErrorCode::kValueGroup, "exponent outside (1/D)Z");
    terms.emplace_back(term.coeff, e.get_num().get_si());
  }
  return FieldElem::laurent(terms);
}

FieldElem from_ratfunc_in_root(const FieldElem& x, const Integer& d) {
  const RatFunc& r = x.as_ratfunc();
  require(r.den.is_monomial(), ErrorCode::kPrecisionExhausted,
          "not a Laurent polynomial in the root variable");
  const long shift = static_cast<long>(r.den.coeffs().size()) - 1;
  std::vector<PuiseuxTerm> terms;
  for (std::size_t k = 0; k < r.num.coeffs().size(); ++k) {
    if (r.num.coeffs()[k] == 0) continue;
    Rational e(static_cast<long>(k) - shift);
    e /= d;
    terms.push_back({r.num.coeffs()[k] / r.den.leading(), e});
  }
  return FieldElem::puiseux(std::move(terms), GammaVal::infinity());
}

}  // namespace acvf
