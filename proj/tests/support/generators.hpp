#pragma once

// Seeded generators and independent oracles shared by the unit tests and the
// acceptance binary. The oracles deliberately avoid the library algorithm
// they check.

#include <map>
#include <optional>

#include "acvf/appendix.hpp"
#include "acvf/coding.hpp"
#include "acvf/gammatype.hpp"
#include "acvf/lattice.hpp"
#include "acvf/omodule.hpp"
#include "acvf/random.hpp"
#include "acvf/stcomp.hpp"
#include "acvf/valspace.hpp"

namespace acvf::testing {

inline FieldElem tp(long e, Backend b = Backend::kRatFunc) {
  return FieldElem::monomial(b, 1, e);
}
inline FieldElem qc(long v, Backend b = Backend::kRatFunc) {
  return FieldElem::from_rational(b, v);
}

/// Plain Gauss-Jordan inverse with first-nonzero pivoting.
inline FieldMatrix gj_inverse(const FieldMatrix& a) {
  const std::size_t n = a.rows();
  const Backend b = backend_of(a);
  FieldMatrix m = a, inv = identity(b, n);
  for (std::size_t c = 0; c < n; ++c) {
    std::size_t p = c;
    while (m(p, c).is_zero()) ++p;
    m.swap_rows(p, c);
    inv.swap_rows(p, c);
    const FieldElem s = m(c, c).inverse();
    for (std::size_t j = 0; j < n; ++j) {
      m(c, j) *= s;
      inv(c, j) *= s;
    }
    for (std::size_t r = 0; r < n; ++r) {
      if (r == c || m(r, c).is_zero()) continue;
      const FieldElem f = m(r, c);
      for (std::size_t j = 0; j < n; ++j) {
        m(r, j) -= f * m(c, j);
        inv(r, j) -= f * inv(c, j);
      }
    }
  }
  return inv;
}

inline bool integral(const FieldVector& v) {
  for (const auto& x : v) {
    if (fe_val(x) < GammaVal(0)) return false;
  }
  return true;
}

inline FieldVector integral_vector(Rng& rng, Backend b, std::size_t n) {
  FieldVector v(n);
  for (auto& x : v) x = rng.integral(b);
  return v;
}

/// Random element of B_n(O): unit diagonal, integral entries above it.
inline FieldMatrix random_borel_o(Rng& rng, Backend b, std::size_t n) {
  FieldMatrix g = zeros(b, n, n);
  for (std::size_t i = 0; i < n; ++i) {
    g(i, i) = rng.unit(b);
    for (std::size_t j = i + 1; j < n; ++j) g(i, j) = rng.integral(b);
  }
  return g;
}

/// Invertible matrix whose entries mix Laurent polynomials and quotients.
inline FieldMatrix random_invertible(Rng& rng, Backend b, std::size_t n) {
  for (;;) {
    FieldMatrix a = zeros(b, n, n);
    for (std::size_t i = 0; i < n; ++i) {
      for (std::size_t j = 0; j < n; ++j) {
        if (rng.uniform(0, 3) == 0) continue;
        if (b == Backend::kRatFunc) {
          a(i, j) = rng.uniform(0, 4) == 0 ? rng.ratfunc(-2, 2)
                                           : rng.laurent(-2, 2, static_cast<int>(rng.uniform(1, 2)));
        } else {
          Rational e(rng.uniform(-4, 4), 2);
          e.canonicalize();
          a(i, j) = FieldElem::monomial(b, rng.rational(4, 2), e);
        }
      }
    }
    if (is_invertible(a)) return a;
  }
}

inline ModuleDesc random_module(Rng& rng, Backend b, std::size_t n) {
  FieldMatrix basis = random_invertible(rng, b, n);
  std::vector<Component> sig;
  for (std::size_t i = 0; i < n; ++i) {
    const auto tag = static_cast<Tag>(rng.uniform(0, 3));
    const Rational g = b == Backend::kRatFunc ? Rational(rng.uniform(-3, 3))
                                              : Rational(rng.uniform(-6, 6)) / 2;
    sig.push_back({tag, g});
  }
  return mod_make(std::move(basis), std::move(sig));
}

inline ModuleDesc random_closed_module(Rng& rng, Backend b, std::size_t n) {
  ModuleDesc m = random_module(rng, b, n);
  for (auto& c : m.signature) {
    if (c.tag == Tag::kMShift) c.tag = Tag::kOShift;
  }
  return mod_canonical(m);
}

inline GammaType random_gamma_type(Rng& rng, std::size_t n, std::size_t max_scales = 3) {
  const auto inf = static_cast<std::size_t>(rng.uniform(0, static_cast<long>(max_scales)));
  const auto eps = static_cast<std::size_t>(rng.uniform(0, static_cast<long>(max_scales)));
  QMatrix m(n, inf + 1 + eps);
  for (std::size_t i = 0; i < n; ++i) {
    for (std::size_t j = 0; j < m.cols(); ++j) {
      if (rng.uniform(0, 2) != 0) m(i, j) = rng.rational(4, 3);
    }
  }
  // Occasionally make a scale column a multiple of an earlier one.
  if (m.cols() > 2 && rng.coin()) {
    const auto j = static_cast<std::size_t>(rng.uniform(1, static_cast<long>(m.cols()) - 1));
    if (j != inf) {
      const Rational f = rng.rational(3, 2);
      for (std::size_t i = 0; i < n; ++i) m(i, j) = f * m(i, 0);
    }
  }
  return gt_make(inf, eps, std::move(m));
}

/// Order-preserving change of scale basis: coefficients C ↦ C·T with T upper
/// triangular, positive diagonal, and the standard scale fixed.
inline GammaType random_rebase(Rng& rng, const GammaType& p) {
  const std::size_t w = p.point.width(), st = p.point.std_col();
  QMatrix t(w, w);
  for (std::size_t i = 0; i < w; ++i) {
    for (std::size_t j = i; j < w; ++j) {
      if (i == st) {
        t(i, j) = i == j ? 1 : 0;
      } else if (i == j) {
        t(i, j) = Rational(rng.uniform(1, 5), rng.uniform(1, 3));
        t(i, j).canonicalize();
      } else if (rng.coin()) {
        t(i, j) = rng.rational(4, 3);
      }
    }
  }
  return gt_make(p.point.inf, p.point.eps, p.point.coeffs * t);
}

inline Rational random_radius(Rng& rng, Backend b) {
  if (b == Backend::kRatFunc) return rng.uniform(-2, 2);
  Rational r(rng.uniform(-4, 4), 2);
  r.canonicalize();
  return r;
}

inline FieldElem random_coefficient(Rng& rng, Backend b) {
  if (b == Backend::kRatFunc) return rng.coin() ? rng.laurent(-2, 2, 2) : rng.ratfunc(-1, 2);
  return rng.puiseux(-2, 2, 2);
}

inline MonomialType random_monomial_type(Rng& rng, Backend b, std::size_t n) {
  MonomialType p;
  for (std::size_t i = 0; i < n; ++i) {
    p.center.push_back(rng.coin() ? FieldElem::zero(b) : random_coefficient(rng, b));
    p.radii.push_back(random_radius(rng, b));
  }
  return p;
}

inline Poly random_poly(Rng& rng, Backend b, std::size_t n, unsigned d) {
  Poly f;
  f.nvars = n;
  for (const auto& e : PolySpace{n, d}.monomials()) {
    if (rng.uniform(0, 2) == 0) f = poly_add_term(f, e, random_coefficient(rng, b));
  }
  return f;
}

/// center + t^radii·u with u integral.
inline FieldVector random_polydisc_point(Rng& rng, const MonomialType& p) {
  FieldVector s = p.center;
  for (std::size_t i = 0; i < s.size(); ++i) {
    s[i] += rng.integral(s[i].backend()).shifted(p.radii[i]);
  }
  return s;
}

// Random entry admitted by th, often at the boundary.
inline FieldElem admitted(Rng& rng, Backend b, const Threshold& th) {
  if (th.kind == Threshold::Kind::kPosInf || rng.uniform(0, 5) == 0) return FieldElem::zero(b);
  Rational v;
  if (th.kind == Threshold::Kind::kNegInf) {
    v = rng.uniform(-3, 3);
  } else if (b == Backend::kRatFunc) {
    Integer c = ceil(th.alpha);
    if (th.strict && Rational(c) == th.alpha) c += 1;
    v = Rational(c) + rng.uniform(0, 1);
  } else {
    v = th.alpha + Rational(rng.uniform(th.strict ? 1 : 0, 2), 2);
    v.canonicalize();
  }
  FieldElem x = FieldElem::monomial(b, rng.rational(3, 2) + 1, v);
  if (rng.coin()) x += FieldElem::monomial(b, rng.rational(3, 1), v + 1);
  return x.is_zero() ? FieldElem::monomial(b, 1, v) : x;
}

inline FieldMatrix random_member(Rng& rng, Backend b, const CongruenceSubgroup& h) {
  FieldMatrix a = identity(b, h.n());
  for (std::size_t i = 0; i < h.n(); ++i) {
    for (std::size_t j = i + 1; j < h.n(); ++j) a(i, j) = admitted(rng, b, h.at(i, j));
  }
  return a;
}

inline FieldMatrix random_borel(Rng& rng, std::size_t n) {
  FieldMatrix b = zeros(Backend::kRatFunc, n, n);
  for (std::size_t i = 0; i < n; ++i) {
    b(i, i) = rng.laurent(-2, 2, 2);
    while (b(i, i).is_zero()) b(i, i) = rng.laurent(-2, 2, 2);
    for (std::size_t j = i + 1; j < n; ++j) b(i, j) = rng.laurent(-2, 2, 2);
  }
  return b;
}

inline FieldMatrix diag_t(const QVector& e, Backend b = Backend::kRatFunc) {
  FieldMatrix d = zeros(b, e.size(), e.size());
  for (std::size_t i = 0; i < e.size(); ++i) d(i, i) = FieldElem::monomial(b, 1, e[i]);
  return d;
}

// Integer point of the stabilizer lattice.
inline QVector random_stabilizer_element(Rng& rng, const GammaType& r) {
  const QMatrix s = gt_stabilizer_basis(r);
  QVector c(r.point.n);
  for (std::size_t j = 0; j < s.cols(); ++j) {
    Integer den = 1;
    for (std::size_t i = 0; i < s.rows(); ++i) mpz_lcm(den.get_mpz_t(), den.get_mpz_t(), s(i, j).get_den_mpz_t());
    const Rational f = Rational(den) * rng.uniform(-2, 2);
    for (std::size_t i = 0; i < s.rows(); ++i) c[i] += f * s(i, j);
  }
  return c;
}

// Generic valuation of p(x) ⊗ q(y): expand in x first, then evaluate the
// coefficient polynomials in y. `swap` does y first.
inline GammaVal iterated_val(const MonomialType& p, const Poly& f, bool swap) {
  const std::size_t outer = swap ? 1 : 0, inner = 1 - outer;
  FieldVector shift(2, FieldElem::zero(p.center[0].backend()));
  shift[outer] = p.center[outer];
  const Poly g = poly_recenter(f, shift);
  std::map<unsigned, Poly> by_power;
  for (const auto& [e, c] : g.terms) {
    auto& h = by_power[e[outer]];
    h.nvars = 1;
    h = poly_add_term(h, {e[inner]}, c);
  }
  const MonomialType q{{p.center[inner]}, {p.radii[inner]}};
  GammaVal best = GammaVal::infinity();
  for (const auto& [k, h] : by_power) best = min(best, gauss_val(q, h) + Rational(Rational(k) * p.radii[outer]));
  return best;
}

inline std::optional<QVector> naive_residues(const ModuleDesc& l, const PolySpace& h, const FieldVector& c) {
  const auto mons = h.monomials();
  const ModuleDesc m = mod_canonical(l);
  QVector z;
  for (std::size_t j = 0; j < m.n; ++j) {
    FieldElem y = FieldElem::zero(c[0].backend());
    for (std::size_t k = 0; k < mons.size(); ++k) {
      FieldElem term = m.basis(k, j);
      for (std::size_t i = 0; i < c.size(); ++i) {
        for (unsigned e = 0; e < mons[k][i]; ++e) term *= c[i];
      }
      y += term;
    }
    if (m.signature[j].tag == Tag::kFree) {
      if (!y.is_zero()) return std::nullopt;
      continue;
    }
    y = y * FieldElem::monomial(y.backend(), 1, m.signature[j].gamma);
    const GammaVal v = fe_val(y);
    if (v < GammaVal(0)) return std::nullopt;
    z.push_back(v == GammaVal(0) ? leading_term(y).first : Rational(0));
  }
  return z;
}

inline FieldVector combo(const std::vector<FieldVector>& vs, const FieldVector& c) {
  FieldVector out(vs[0].size(), FieldElem::zero(vs[0][0].backend()));
  for (std::size_t i = 0; i < vs.size(); ++i) {
    for (std::size_t k = 0; k < out.size(); ++k) out[k] += c[i] * vs[i][k];
  }
  return out;
}

// Families built to be far from separated: later vectors are perturbations of
// combinations of earlier ones, sometimes exactly dependent.
inline std::vector<FieldVector> random_family(Rng& rng, Backend b) {
  const auto n = static_cast<std::size_t>(rng.uniform(1, 5));
  const auto m = static_cast<std::size_t>(rng.uniform(1, 5));
  std::vector<FieldVector> vs;
  for (std::size_t j = 0; j < m; ++j) {
    FieldVector v(n, FieldElem::zero(b));
    if (j > 0 && rng.coin()) {
      for (std::size_t i = 0; i < j; ++i) {
        const FieldElem c = FieldElem::monomial(b, rng.rational(3, 2), rng.uniform(-1, 1));
        for (std::size_t k = 0; k < n; ++k) v[k] += c * vs[i][k];
      }
      if (rng.uniform(0, 3) != 0) {
        v[static_cast<std::size_t>(rng.uniform(0, static_cast<long>(n) - 1))] +=
            FieldElem::monomial(b, 1, rng.uniform(0, 3));
      }
    } else {
      for (auto& x : v) {
        x = b == Backend::kRatFunc ? rng.ratfunc(-2, 2) : rng.puiseux(-2, 2, 2);
      }
    }
    vs.push_back(std::move(v));
  }
  return vs;
}

// The min-formula on random coefficients: rational ones (as stated) and
// t-power multiples, which probe cross-valuation cancellation.
inline bool min_formula_holds(const std::vector<FieldVector>& vs, Rng& rng, int samples) {
  if (vs.empty()) return true;
  const Backend b = vs[0][0].backend();
  for (int s = 0; s < samples; ++s) {
    FieldVector c;
    GammaVal expect = GammaVal::infinity();
    for (const auto& v : vs) {
      FieldElem ci = FieldElem::from_rational(b, rng.rational(6, 4));
      if (s % 2 == 1) ci = ci.shifted(rng.uniform(-3, 3));
      expect = min(expect, fe_val(ci) + vv_val(v));
      c.push_back(ci);
    }
    if (vv_val(combo(vs, c)) != expect) return false;
  }
  return true;
}

}  // namespace acvf::testing
