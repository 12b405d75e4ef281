#include "acvf/coding.hpp"

namespace acvf {

namespace {

using Kind = Threshold::Kind;

void require_unipotent(const FieldMatrix& a, std::size_t n) {
  require(a.rows() == n && a.cols() == n, ErrorCode::kDimensionMismatch, "matrix size");
  for (std::size_t i = 0; i < n; ++i) {
    require(a(i, i) == FieldElem::one(a(i, i).backend()), ErrorCode::kNotTriangular,
            "diagonal entry is not 1");
    for (std::size_t j = 0; j < i; ++j) {
      require(a(i, j).is_zero(), ErrorCode::kNotTriangular, "entry below the diagonal");
    }
  }
}

void require_group(const CongruenceSubgroup& h) {
  require(cs_group_check(h), ErrorCode::kNotAGroup, "thresholds do not define a group");
}

// Whether every value admitted by (s, strict_s) is admitted by `target`.
bool implies(const Rational& s, bool strict_s, const Threshold& target) {
  switch (target.kind) {
    case Kind::kNegInf: return true;
    case Kind::kPosInf: return false;
    case Kind::kFinite:
      return s > target.alpha || (s == target.alpha && (strict_s || !target.strict));
  }
  return false;
}

}  // namespace

bool threshold_admits(const Threshold& th, const GammaVal& v) {
  if (v.is_infinite()) return true;
  switch (th.kind) {
    case Kind::kNegInf: return true;
    case Kind::kPosInf: return false;
    case Kind::kFinite: return th.strict ? v.value() > th.alpha : v.value() >= th.alpha;
  }
  return false;
}

CongruenceSubgroup::CongruenceSubgroup(std::size_t n)
    : n_(n), th_(n * (n > 0 ? n - 1 : 0) / 2, Threshold::finite(0)) {}

std::size_t CongruenceSubgroup::index(std::size_t i, std::size_t j) const {
  require(i < j && j < n_, ErrorCode::kDimensionMismatch, "threshold index outside i < j < n");
  // Rows 0..i−1 hold (n−1) + (n−2) + … entries.
  return i * (2 * n_ - i - 1) / 2 + (j - i - 1);
}

const Threshold& CongruenceSubgroup::at(std::size_t i, std::size_t j) const { return th_[index(i, j)]; }

void CongruenceSubgroup::set(std::size_t i, std::size_t j, Threshold th) {
  if (th.kind != Kind::kFinite) {
    th.alpha = 0;
    th.strict = false;
  }
  th_[index(i, j)] = th;
}

bool cs_group_check(const CongruenceSubgroup& h) {
  const std::size_t n = h.n();
  for (std::size_t i = 0; i < n; ++i) {
    for (std::size_t j = i + 1; j < n; ++j) {
      for (std::size_t k = j + 1; k < n; ++k) {
        const Threshold& a = h.at(i, j);
        const Threshold& b = h.at(j, k);
        // A +∞ factor forces the product term to vanish.
        if (a.kind == Kind::kPosInf || b.kind == Kind::kPosInf) continue;
        if (a.kind == Kind::kNegInf || b.kind == Kind::kNegInf) {
          if (h.at(i, k).kind != Kind::kNegInf) return false;
          continue;
        }
        if (!implies(a.alpha + b.alpha, a.strict || b.strict, h.at(i, k))) return false;
      }
    }
  }
  return true;
}

bool cs_member(const FieldMatrix& a, const CongruenceSubgroup& h) {
  require_unipotent(a, h.n());
  for (std::size_t i = 0; i < h.n(); ++i) {
    for (std::size_t j = i + 1; j < h.n(); ++j) {
      if (!threshold_admits(h.at(i, j), fe_val(a(i, j)))) return false;
    }
  }
  return true;
}

bool cs_coset_equal(const FieldMatrix& a, const FieldMatrix& b, const CongruenceSubgroup& h) {
  require_group(h);
  require_unipotent(a, h.n());
  require_unipotent(b, h.n());
  return cs_member(solve_upper(b, a), h);
}

FieldMatrix cs_coset_code(const FieldMatrix& a, const CongruenceSubgroup& h) {
  require_group(h);
  const std::size_t n = h.n();
  require_unipotent(a, n);
  FieldMatrix c = a;
  // Right multiplication by 1 + x·E_ij adds x·(column i) to column j; it
  // touches (i,j) and entries farther from the diagonal, which come later.
  for (std::size_t dist = 1; dist < n; ++dist) {
    for (std::size_t i = 0; i + dist < n; ++i) {
      const std::size_t j = i + dist;
      const Threshold& th = h.at(i, j);
      FieldElem kept;
      switch (th.kind) {
        case Kind::kPosInf: continue;
        case Kind::kNegInf: kept = FieldElem::zero(c(i, j).backend()); break;
        case Kind::kFinite: kept = fe_reduce_mod(c(i, j), th.alpha, th.strict); break;
      }
      const FieldElem x = kept - c(i, j);
      if (x.is_zero()) continue;
      for (std::size_t k = 0; k <= i; ++k) {
        if (!c(k, i).is_zero()) c(k, j) += c(k, i) * x;
      }
    }
  }
  return c;
}

CongruenceSubgroup dnu(const GammaType& r) {
  const GammaPoint g = gt_canonical(r);
  const std::size_t st = g.std_col();
  CongruenceSubgroup h(g.n);
  for (std::size_t i = 0; i < g.n; ++i) {
    for (std::size_t j = i + 1; j < g.n; ++j) {
      QVector a(g.n);
      a[i] = 1;
      a[j] = -1;
      const ScaleElem e = gt_affine_value(g, a, 0);
      int lead = 0;
      for (std::size_t k = 0; k < st && lead == 0; ++k) lead = sgn(e[k]);
      if (lead > 0) {
        h.set(i, j, Threshold::pos_inf());
      } else if (lead < 0) {
        h.set(i, j, Threshold::neg_inf());
      } else {
        int tail = 0;
        for (std::size_t k = st + 1; k < e.size() && tail == 0; ++k) tail = sgn(e[k]);
        h.set(i, j, Threshold::finite(e[st], tail > 0));
      }
    }
  }
  return h;
}

namespace {

void require_borel(const FieldMatrix& b, std::size_t n) {
  require(b.rows() == n && b.cols() == n, ErrorCode::kDimensionMismatch,
          "matrix size differs from the type's arity");
  for (std::size_t i = 0; i < n; ++i) {
    require(!b(i, i).is_zero(), ErrorCode::kNotTriangular, "zero diagonal entry");
    for (std::size_t j = 0; j < i; ++j) {
      require(b(i, j).is_zero(), ErrorCode::kNotTriangular, "entry below the diagonal");
    }
  }
}

}  // namespace

bool germ_equiv(const GermPair& p1, const GermPair& p2) {
  const std::size_t n = p1.r.point.n;
  require(p2.r.point.n == n, ErrorCode::kDimensionMismatch, "arity mismatch");
  require_borel(p1.b, n);
  require_borel(p2.b, n);
  require(backend_of(p1.b) == backend_of(p2.b), ErrorCode::kBackendMismatch,
          "germ matrices over different backends");

  // Translating t to t − s with s the standard part turns b into
  // b·diag(t^{s}); the shifts are applied to valuations below rather than
  // to b, so s need not lie in the value group.
  const auto [c1, r1] = gt_translate0(p1.r);
  const auto [c2, r2] = gt_translate0(p2.r);
  if (!gt_equal(r1, r2)) return false;

  // N = b⁻¹b' = D·U with D its diagonal and U unipotent.
  const FieldMatrix nm = solve_upper(p1.b, p2.b);
  QVector dval(n);
  for (std::size_t i = 0; i < n; ++i) dval[i] = fe_val(nm(i, i)).value() + c1[i] - c2[i];
  if (!gt_stab_member(r1, dval)) return false;

  const CongruenceSubgroup h = dnu(r1);
  for (std::size_t i = 0; i < n; ++i) {
    const FieldElem inv = nm(i, i).inverse();
    for (std::size_t j = i + 1; j < n; ++j) {
      const GammaVal v = fe_val(inv * nm(i, j));
      if (v.is_infinite()) continue;
      // Entry of diag(t^{−s'})·U·diag(t^{s'}) with s' = −c2.
      if (!threshold_admits(h.at(i, j), GammaVal(v.value() + c2[i] - c2[j]))) return false;
    }
  }
  return true;
}

}  // namespace acvf
