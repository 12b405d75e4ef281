#include "acvf/qpoly.hpp"

#include <algorithm>

#include "acvf/error.hpp"

namespace acvf {

QPoly::QPoly(std::vector<Rational> coeffs) : coeffs_(std::move(coeffs)) {
  trim();
}

QPoly QPoly::constant(const Rational& c) { return QPoly({c}); }

QPoly QPoly::monomial(const Rational& c, std::size_t k) {
  if (c == 0) return {};
  std::vector<Rational> v(k + 1);
  v[k] = c;
  QPoly p;
  p.coeffs_ = std::move(v);
  return p;
}

void QPoly::trim() {
  while (!coeffs_.empty() && coeffs_.back() == 0) coeffs_.pop_back();
}

std::size_t QPoly::ord() const {
  for (std::size_t i = 0; i < coeffs_.size(); ++i) {
    if (coeffs_[i] != 0) return i;
  }
  raise(ErrorCode::kMalformed, "ord of zero polynomial");
}

bool QPoly::is_monomial() const {
  if (coeffs_.empty()) return false;
  for (std::size_t i = 0; i + 1 < coeffs_.size(); ++i) {
    if (coeffs_[i] != 0) return false;
  }
  return true;
}

bool QPoly::is_one() const { return coeffs_.size() == 1 && coeffs_[0] == 1; }

Rational QPoly::coeff(std::size_t k) const {
  return k < coeffs_.size() ? coeffs_[k] : Rational(0);
}

QPoly QPoly::operator-() const {
  QPoly r = *this;
  for (auto& c : r.coeffs_) c = -c;
  return r;
}

QPoly operator+(const QPoly& a, const QPoly& b) {
  const auto& big = a.coeffs_.size() >= b.coeffs_.size() ? a : b;
  const auto& small = a.coeffs_.size() >= b.coeffs_.size() ? b : a;
  QPoly r = big;
  for (std::size_t i = 0; i < small.coeffs_.size(); ++i) {
    r.coeffs_[i] += small.coeffs_[i];
  }
  r.trim();
  return r;
}

QPoly operator-(const QPoly& a, const QPoly& b) { return a + (-b); }

QPoly operator*(const QPoly& a, const QPoly& b) {
  if (a.is_zero() || b.is_zero()) return {};
  std::vector<Rational> out(a.coeffs_.size() + b.coeffs_.size() - 1);
  for (std::size_t i = 0; i < a.coeffs_.size(); ++i) {
    if (a.coeffs_[i] == 0) continue;
    for (std::size_t j = 0; j < b.coeffs_.size(); ++j) {
      out[i + j] += a.coeffs_[i] * b.coeffs_[j];
    }
  }
  return QPoly(std::move(out));
}

QPoly QPoly::scaled(const Rational& c) const {
  if (c == 0) return {};
  QPoly r = *this;
  for (auto& x : r.coeffs_) x *= c;
  return r;
}

QPoly QPoly::shifted_up(std::size_t k) const {
  if (is_zero() || k == 0) return *this;
  QPoly r;
  r.coeffs_.assign(k, Rational(0));
  r.coeffs_.insert(r.coeffs_.end(), coeffs_.begin(), coeffs_.end());
  return r;
}

QPoly QPoly::shifted_down(std::size_t k) const {
  if (is_zero() || k == 0) return *this;
  QPoly r;
  r.coeffs_.assign(coeffs_.begin() + static_cast<std::ptrdiff_t>(k), coeffs_.end());
  return r;
}

std::pair<QPoly, QPoly> QPoly::divmod(const QPoly& a, const QPoly& b) {
  require(!b.is_zero(), ErrorCode::kDivisionByZero, "polynomial division by zero");
  if (a.degree() < b.degree()) return {QPoly(), a};
  std::vector<Rational> rem = a.coeffs_;
  std::vector<Rational> quot(a.coeffs_.size() - b.coeffs_.size() + 1);
  const Rational inv_lead = 1 / b.leading();
  const std::size_t db = b.coeffs_.size() - 1;
  for (std::size_t k = quot.size(); k-- > 0;) {
    const Rational& top = rem[k + db];
    if (top == 0) continue;
    Rational q = top * inv_lead;
    for (std::size_t j = 0; j <= db; ++j) rem[k + j] -= q * b.coeffs_[j];
    quot[k] = std::move(q);
  }
  return {QPoly(std::move(quot)), QPoly(std::move(rem))};
}

QPoly QPoly::exact_div(const QPoly& a, const QPoly& b) {
  if (b.is_monomial() && b.coeffs_.size() - 1 <= (a.is_zero() ? 0 : a.ord())) {
    return a.shifted_down(b.coeffs_.size() - 1).scaled(1 / b.leading());
  }
  return divmod(a, b).first;
}

QPoly QPoly::monic() const {
  if (is_zero() || leading() == 1) return *this;
  return scaled(1 / leading());
}

QPoly QPoly::gcd(const QPoly& a, const QPoly& b) {
  if (a.is_zero()) return b.monic();
  if (b.is_zero()) return a.monic();
  // Powers of t are the common case (Laurent polynomials).
  if (a.is_monomial() || b.is_monomial()) {
    const auto& mono = a.is_monomial() ? a : b;
    const auto& other = a.is_monomial() ? b : a;
    const std::size_t k = std::min(mono.coeffs_.size() - 1, other.ord());
    return monomial(1, k);
  }
  if (a.degree() == 0 || b.degree() == 0) return constant(1);
  QPoly x = a.monic();
  QPoly y = b.monic();
  while (!y.is_zero()) {
    QPoly r = divmod(x, y).second;
    x = std::move(y);
    y = r.monic();
  }
  return x.monic();
}

std::vector<Rational> QPoly::series_quotient(const QPoly& a, const QPoly& b,
                                             std::size_t count) {
  require(!b.is_zero() && b.coeffs_[0] != 0, ErrorCode::kDivisionByZero,
          "series quotient needs b(0) != 0");
  std::vector<Rational> out(count);
  const Rational inv0 = 1 / b.coeffs_[0];
  for (std::size_t k = 0; k < count; ++k) {
    Rational acc = a.coeff(k);
    const std::size_t lim = std::min(k, b.coeffs_.size() - 1);
    for (std::size_t j = 1; j <= lim; ++j) acc -= b.coeffs_[j] * out[k - j];
    out[k] = acc * inv0;
  }
  return out;
}

}  // namespace acvf
