#include "tseries.hpp"

namespace acvf::detail {

TSer to_series(const FieldElem& x, long d, long cap) {
  TSer s;
  if (x.backend() == Backend::kRatFunc) {
    const RatFunc& r = x.as_ratfunc();
    if (r.num.is_zero()) return s;
    const auto k = static_cast<long>(r.den.ord());
    const QPoly unit_den = r.den.shifted_down(static_cast<std::size_t>(k));
    if (unit_den.is_one()) {
      const auto o = static_cast<long>(r.num.ord());
      s.lo = o - k;
      s.c.assign(r.num.coeffs().begin() + o, r.num.coeffs().end());
      return s;
    }
    // x = t^{-k}·num/unit_den with unit_den(0) ≠ 0.
    s.prec = cap;
    const long count = cap + k;
    if (count > 0) {
      s.lo = -k;
      s.c = QPoly::series_quotient(r.num, unit_den, static_cast<std::size_t>(count));
    }
    s.normalize();
    return s;
  }
  const Puiseux& p = x.as_puiseux();
  if (p.prec.is_finite()) {
    const Rational pd = p.prec.value() * d;
    s.prec = ceil(pd).get_si();
  }
  if (p.terms.empty()) return s;
  auto sexp = [&](const Rational& e) {
    const Rational v = e * d;
    require(is_integer(v), ErrorCode::kValueGroup, "exponent outside (1/D)Z");
    return v.get_num().get_si();
  };
  s.lo = sexp(p.terms.front().exp);
  s.c.assign(static_cast<std::size_t>(sexp(p.terms.back().exp) - s.lo + 1), Rational(0));
  for (const auto& t : p.terms) s.c[static_cast<std::size_t>(sexp(t.exp) - s.lo)] = t.coeff;
  return s;
}

FieldElem from_series(const TSer& s, Backend b, long d) {
  require(s.exact(), ErrorCode::kPrecisionExhausted, "series is not exact");
  if (b == Backend::kRatFunc) {
    std::vector<std::pair<Rational, long>> terms;
    for (std::size_t k = 0; k < s.c.size(); ++k) {
      if (s.c[k] != 0) terms.emplace_back(s.c[k], s.lo + static_cast<long>(k));
    }
    return FieldElem::laurent(terms);
  }
  std::vector<PuiseuxTerm> terms;
  for (std::size_t k = 0; k < s.c.size(); ++k) {
    if (s.c[k] == 0) continue;
    terms.push_back({s.c[k], Rational(s.lo + static_cast<long>(k), d)});
    terms.back().exp.canonicalize();
  }
  return FieldElem::puiseux(std::move(terms), GammaVal::infinity());
}

}  // namespace acvf::detail
