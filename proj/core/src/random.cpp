#include "acvf/random.hpp"
#include <algorithm>

namespace acvf {

long Rng::uniform(long lo, long hi) {
  const auto span = static_cast<std::uint64_t>(hi - lo) + 1;
  return lo + static_cast<long>(engine_() % span);
}

Rational Rng::rational(long num_bound, long den_bound) {
  Rational q(uniform(-num_bound, num_bound), uniform(1, den_bound));
  q.canonicalize();
  return q;
}

FieldElem Rng::laurent(long lo, long hi, int terms) {
  std::vector<std::pair<Rational, long>> ts;
  for (int k = 0; k < terms; ++k) ts.emplace_back(rational(5, 3), uniform(lo, hi));
  return FieldElem::laurent(ts);
}

FieldElem Rng::ratfunc(long lo, long hi) {
  FieldElem num = laurent(lo, hi, static_cast<int>(uniform(1, 3)));
  if (uniform(0, 2) != 0) return num;
  std::vector<Rational> den{Rational(uniform(1, 3))};
  const long deg = uniform(1, 2);
  for (long k = 0; k < deg; ++k) den.push_back(rational(3, 2));
  return num / FieldElem::ratfunc(QPoly(std::move(den)), QPoly::constant(1));
}

FieldElem Rng::puiseux(long lo, long hi, long den) {
  std::vector<PuiseuxTerm> ts;
  const long terms = uniform(1, 3);
  for (long k = 0; k < terms; ++k) {
    Rational e(uniform(lo * den, hi * den), den);
    e.canonicalize();
    Rational c = rational(5, 3);
    if (c == 0) continue;
    bool dup = false;
    for (auto& t : ts) dup = dup || t.exp == e;
    if (!dup) ts.push_back({c, e});
  }
  std::sort(ts.begin(), ts.end(),
            [](const PuiseuxTerm& a, const PuiseuxTerm& b) { return a.exp < b.exp; });
  return FieldElem::puiseux(std::move(ts), GammaVal::infinity());
}

FieldElem Rng::unit(Backend b) {
  Rational c;
  do { c = rational(4, 3); } while (c == 0);
  FieldElem u = FieldElem::from_rational(b, c);
  if (coin()) u += FieldElem::monomial(b, rational(3, 2), Rational(uniform(1, 2)));
  return u;
}

FieldElem Rng::integral(Backend b) {
  if (uniform(0, 4) == 0) return FieldElem::zero(b);
  return unit(b).shifted(Rational(uniform(0, 2)));
}

FieldMatrix Rng::invertible(Backend b, std::size_t n, long lo, long hi) {
  for (;;) {
    FieldMatrix a = zeros(b, n, n);
    for (std::size_t i = 0; i < n; ++i) {
      for (std::size_t j = 0; j < n; ++j) {
        if (uniform(0, 3) == 0) continue;
        a(i, j) = b == Backend::kRatFunc ? laurent(lo, hi, static_cast<int>(uniform(1, 2)))
                                         : puiseux(lo, hi, 2);
      }
    }
    if (is_invertible(a)) return a;
  }
}

}  // namespace acvf
