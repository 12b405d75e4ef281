#include "acvf/stcomp.hpp"

#include <algorithm>
#include <functional>

namespace acvf {

namespace {

Integer binomial(unsigned n, unsigned k) {
  Integer r;
  mpz_bin_uiui(r.get_mpz_t(), n, k);
  return r;
}

Backend backend_of(const FieldVector& v) {
  require(!v.empty(), ErrorCode::kEmptyInput, "empty center");
  return v[0].backend();
}

void check_type(const MonomialType& p) {
  require(!p.center.empty() && p.center.size() == p.radii.size(),
          ErrorCode::kDimensionMismatch, "center and radii lengths differ");
  const Backend b = backend_of(p.center);
  for (const auto& x : p.center) require(x.backend() == b, ErrorCode::kBackendMismatch, "mixed backends");
  for (const auto& g : p.radii) require_value_group(b, g);
}

Rational dot(const Exponent& a, const QVector& g) {
  Rational s;
  for (std::size_t i = 0; i < a.size(); ++i) s += Rational(a[i]) * g[i];
  return s;
}

// All u ∈ ℕ^n with |u| ≤ d, in grlex order.
std::vector<Exponent> simplex(std::size_t n, unsigned d) { return PolySpace{n, d}.monomials(); }

}  // namespace

unsigned total_degree(const Exponent& e) {
  unsigned s = 0;
  for (unsigned x : e) s += x;
  return s;
}

bool GrlexLess::operator()(const Exponent& a, const Exponent& b) const {
  const unsigned da = total_degree(a), db = total_degree(b);
  if (da != db) return da < db;
  return std::lexicographical_compare(b.begin(), b.end(), a.begin(), a.end());
}

Poly poly_add_term(Poly f, const Exponent& e, const FieldElem& c) {
  require(e.size() == f.nvars, ErrorCode::kDimensionMismatch, "exponent length");
  auto it = f.terms.find(e);
  if (it == f.terms.end()) {
    if (!c.is_zero()) f.terms.emplace(e, c);
    return f;
  }
  it->second += c;
  if (it->second.is_zero()) f.terms.erase(it);
  return f;
}

Poly poly_recenter(const Poly& f, const FieldVector& a) {
  require(a.size() == f.nvars, ErrorCode::kDimensionMismatch, "center length");
  std::map<Exponent, FieldElem, GrlexLess> acc;
  for (const auto& [alpha, c] : f.terms) {
    // Π_i (y_i + a_i)^{α_i} = Σ_{k ≤ α} Π_i C(α_i, k_i) a_i^{α_i − k_i} y_i^{k_i}.
    Exponent k(f.nvars, 0);
    std::function<void(std::size_t, FieldElem)> rec = [&](std::size_t i, FieldElem coef) {
      if (i == f.nvars) {
        auto [it, fresh] = acc.try_emplace(k, coef);
        if (!fresh) it->second += coef;
        return;
      }
      for (unsigned ki = 0; ki <= alpha[i]; ++ki) {
        k[i] = ki;
        FieldElem term = coef * a[i].pow(alpha[i] - ki);
        rec(i + 1, term.scaled(Rational(binomial(alpha[i], ki))));
      }
      k[i] = 0;
    };
    rec(0, c);
  }
  Poly out;
  out.nvars = f.nvars;
  for (auto& [e, c] : acc) {
    if (!c.is_zero()) out.terms.emplace(e, c);
  }
  return out;
}

FieldElem poly_eval(const Poly& f, const FieldVector& s) {
  require(s.size() == f.nvars, ErrorCode::kDimensionMismatch, "point length");
  FieldElem acc = FieldElem::zero(s.empty() ? Backend::kRatFunc : s[0].backend());
  for (const auto& [e, c] : f.terms) {
    FieldElem m = c;
    for (std::size_t i = 0; i < e.size(); ++i) {
      if (e[i] > 0) m *= s[i].pow(e[i]);
    }
    acc += m;
  }
  return acc;
}

unsigned poly_degree(const Poly& f) {
  unsigned d = 0;
  for (const auto& kv : f.terms) d = std::max(d, total_degree(kv.first));
  return d;
}

std::vector<Exponent> PolySpace::monomials() const {
  std::vector<Exponent> out;
  Exponent e(nvars, 0);
  for (unsigned deg = 0; deg <= degree; ++deg) {
    // Exponents of total degree deg in lex-descending order.
    std::function<void(std::size_t, unsigned)> rec = [&](std::size_t i, unsigned left) {
      if (i + 1 == nvars) {
        e[i] = left;
        out.push_back(e);
        return;
      }
      for (unsigned k = left + 1; k-- > 0;) {
        e[i] = k;
        rec(i + 1, left - k);
      }
    };
    if (nvars == 0) {
      out.push_back(e);
      break;
    }
    rec(0, deg);
  }
  return out;
}

std::size_t PolySpace::dim() const {
  return binomial(static_cast<unsigned>(nvars) + degree, degree).get_ui();
}

FieldVector poly_coords(const Poly& f, const PolySpace& h, Backend b) {
  require(f.nvars == h.nvars, ErrorCode::kDimensionMismatch, "variable counts differ");
  require(poly_degree(f) <= h.degree, ErrorCode::kDimensionMismatch,
          "polynomial degree exceeds the space");
  const auto mons = h.monomials();
  FieldVector v(mons.size(), FieldElem::zero(b));
  for (std::size_t k = 0; k < mons.size(); ++k) {
    auto it = f.terms.find(mons[k]);
    if (it != f.terms.end()) v[k] = it->second;
  }
  return v;
}

Poly coords_poly(const FieldVector& v, const PolySpace& h) {
  const auto mons = h.monomials();
  require(v.size() == mons.size(), ErrorCode::kDimensionMismatch, "coefficient vector length");
  Poly f;
  f.nvars = h.nvars;
  for (std::size_t k = 0; k < mons.size(); ++k) {
    if (!v[k].is_zero()) f.terms.emplace(mons[k], v[k]);
  }
  return f;
}

GammaVal gauss_val(const MonomialType& p, const Poly& f) {
  check_type(p);
  const Poly g = poly_recenter(f, p.center);
  GammaVal best = GammaVal::infinity();
  for (const auto& [alpha, c] : g.terms) best = min(best, fe_val(c) + dot(alpha, p.radii));
  return best;
}

FieldVector gauss_witness(const MonomialType& p, const Poly& f) {
  check_type(p);
  const Backend b = backend_of(p.center);
  const GammaVal target = gauss_val(p, f);
  FieldVector s = p.center;
  if (target.is_infinite()) return s;
  // Residue polynomial of the terms on the minimum; it is nonzero of degree
  // ≤ deg f, so it cannot vanish on the whole simplex grid.
  const Poly g = poly_recenter(f, p.center);
  for (const auto& u : simplex(f.nvars, poly_degree(f))) {
    Rational r;
    for (const auto& [alpha, c] : g.terms) {
      if (fe_val(c) + dot(alpha, p.radii) != target) continue;
      Rational m = leading_term(c).first;
      for (std::size_t i = 0; i < alpha.size(); ++i) {
        Rational ui(u[i]);
        for (unsigned k = 0; k < alpha[i]; ++k) m *= ui;
      }
      r += m;
    }
    if (r == 0) continue;
    for (std::size_t i = 0; i < s.size(); ++i) {
      s[i] = p.center[i] + FieldElem::monomial(b, Rational(u[i]), p.radii[i]);
    }
    return s;
  }
  raise(ErrorCode::kMalformed, "no witness on the simplex grid");
}

FieldMatrix shifted_power_basis(const PolySpace& h, const FieldVector& center) {
  require(center.size() == h.nvars, ErrorCode::kDimensionMismatch, "center length");
  const Backend b = backend_of(center);
  const auto mons = h.monomials();
  FieldMatrix m = zeros(b, mons.size(), mons.size());
  FieldVector neg(center.size());
  for (std::size_t i = 0; i < center.size(); ++i) neg[i] = -center[i];
  for (std::size_t j = 0; j < mons.size(); ++j) {
    // (x − a)^α is x^α recentred at −a.
    Poly mono;
    mono.nvars = h.nvars;
    mono.terms.emplace(mons[j], FieldElem::one(b));
    m.set_col(j, poly_coords(poly_recenter(mono, neg), h, b));
  }
  return m;
}

LatticeCode jd(const MonomialType& p, unsigned d) {
  check_type(p);
  require(d >= 1, ErrorCode::kMalformed, "degree must be at least 1");
  const PolySpace h{p.center.size(), d};
  LatticeCode l;
  l.n = h.dim();
  l.U = shifted_power_basis(h, p.center);
  for (const auto& alpha : h.monomials()) l.gamma.push_back(-dot(alpha, p.radii));
  for (const auto& g : l.gamma) require_value_group(backend_of(p.center), g);
  return lat_canon(l);
}

GammaVal trop_h(const ModuleDesc& l, const FieldVector& b) { return semilattice_val(l, b); }

GammaVal trop_h(const LatticeCode& l, const FieldVector& b) {
  require(b.size() == l.n, ErrorCode::kDimensionMismatch, "coefficient vector length");
  const FieldVector y = solve_upper(lat_basis(l), b);
  GammaVal best = GammaVal::infinity();
  for (const auto& yi : y) best = min(best, fe_val(yi));
  return best;
}

ModuleDesc family_at(const AffineLatticeFamily& f, const QVector& gamma) {
  require(f.L.cols() == gamma.size(), ErrorCode::kDimensionMismatch, "parameter length");
  const QVector w = f.L * gamma;
  std::vector<Component> sig;
  for (std::size_t k = 0; k < w.size(); ++k) sig.push_back({Tag::kOShift, w[k] + f.c[k]});
  return mod_make(shifted_power_basis(f.space, f.center), std::move(sig));
}

namespace {

void check_family(const AffineLatticeFamily& f, std::size_t m) {
  const std::size_t dim = f.space.dim();
  require(f.L.rows() == dim && f.c.size() == dim && f.L.cols() == m,
          ErrorCode::kDimensionMismatch, "weight map shape");
  require(f.center.size() == f.space.nvars, ErrorCode::kDimensionMismatch, "center length");
}

}  // namespace

std::optional<GammaType> integrate_val(const IntegralType& q, const Poly& f) {
  const GammaPoint g = gt_canonical(q.r);
  check_family(q.family, g.n);
  require(poly_degree(f) <= q.family.space.degree, ErrorCode::kDimensionMismatch,
          "polynomial degree exceeds the family's space");
  const Poly rc = poly_recenter(f, q.family.center);
  const auto mons = q.family.space.monomials();
  std::optional<ScaleElem> best;
  for (std::size_t k = 0; k < mons.size(); ++k) {
    auto it = rc.terms.find(mons[k]);
    if (it == rc.terms.end()) continue;
    QVector neg_l(g.n);
    for (std::size_t j = 0; j < g.n; ++j) neg_l[j] = -q.family.L(k, j);
    const ScaleElem v =
        gt_affine_value(g, neg_l, fe_val(it->second).value() - q.family.c[k]);
    if (!best || scale_less(v, *best)) best = v;
  }
  if (!best) return std::nullopt;
  QMatrix m(1, g.width());
  for (std::size_t j = 0; j < g.width(); ++j) m(0, j) = (*best)[j];
  return gt_make(g.inf, g.eps, std::move(m));
}

Recovered recover(const IntegralType& q, unsigned d) {
  const GammaPoint g = gt_canonical(q.r);
  check_family(q.family, g.n);
  require(d >= 1 && d <= q.family.space.degree, ErrorCode::kDimensionMismatch,
          "degree outside the family's space");
  const PolySpace hd{q.family.space.nvars, d};
  const std::size_t dim = hd.dim();  // grlex puts degree ≤ d first
  QMatrix ld(dim, g.n);
  QVector cd(dim);
  for (std::size_t k = 0; k < dim; ++k) {
    for (std::size_t j = 0; j < g.n; ++j) ld(k, j) = q.family.L(k, j);
    cd[k] = q.family.c[k];
  }
  // Directions r moves in: its scale columns.
  QMatrix sc(g.n, g.inf + g.eps);
  for (std::size_t i = 0; i < g.n; ++i) {
    std::size_t col = 0;
    for (std::size_t j = 0; j < g.width(); ++j) {
      if (j != g.std_col()) sc(i, col++) = g.coeffs(i, j);
    }
  }
  require(rank(ld * sc) == rank(sc), ErrorCode::kNotInjective,
          "weight map is not generically injective on r");
  Recovered out;
  out.r = gt_push(q.r, ld, cd);
  out.family.space = hd;
  out.family.center = q.family.center;
  out.family.L = q_identity(dim);
  out.family.c = QVector(dim);
  return out;
}

}  // namespace acvf
