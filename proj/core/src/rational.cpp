#include "acvf/rational.hpp"

#include <cctype>

#include "acvf/error.hpp"

namespace acvf {

namespace {

bool is_integer_literal(std::string_view s) {
  if (s.empty()) return false;
  std::size_t i = (s[0] == '-' || s[0] == '+') ? 1 : 0;
  if (i == s.size()) return false;
  for (; i < s.size(); ++i) {
    if (!std::isdigit(static_cast<unsigned char>(s[i]))) return false;
  }
  return true;
}

}  // namespace

Rational parse_rational(std::string_view text) {
  const auto slash = text.find('/');
  const std::string_view num = text.substr(0, slash);
  const std::string_view den =
      slash == std::string_view::npos ? std::string_view("1")
                                      : text.substr(slash + 1);
  if (!is_integer_literal(num) || !is_integer_literal(den)) {
    raise(ErrorCode::kMalformed, "bad rational literal '" + std::string(text) + "'");
  }
  // mpz_class rejects a leading '+'.
  auto strip = [](std::string_view s) {
    return std::string(s[0] == '+' ? s.substr(1) : s);
  };
  Integer p(strip(num), 10);
  Integer q(strip(den), 10);
  if (q == 0) raise(ErrorCode::kMalformed, "zero denominator");
  Rational r(p, q);
  r.canonicalize();
  return r;
}

std::string to_string(const Rational& q) { return q.get_str(10); }

Integer floor(const Rational& q) {
  Integer r;
  mpz_fdiv_q(r.get_mpz_t(), q.get_num_mpz_t(), q.get_den_mpz_t());
  return r;
}

Integer ceil(const Rational& q) {
  Integer r;
  mpz_cdiv_q(r.get_mpz_t(), q.get_num_mpz_t(), q.get_den_mpz_t());
  return r;
}

bool is_integer(const Rational& q) { return q.get_den() == 1; }

const Rational& GammaVal::value() const {
  if (infinite_) raise(ErrorCode::kMalformed, "value() of infinite GammaVal");
  return value_;
}

std::string to_string(const GammaVal& g) {
  return g.is_infinite() ? std::string("inf") : to_string(g.value());
}

GammaVal parse_gamma_val(std::string_view text) {
  if (text == "inf" || text == "+inf") return GammaVal::infinity();
  return GammaVal(parse_rational(text));
}

std::ostream& operator<<(std::ostream& os, const GammaVal& g) {
  return os << to_string(g);
}

}  // namespace acvf
