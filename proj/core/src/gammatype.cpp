#include "acvf/gammatype.hpp"

#include <algorithm>

namespace acvf {

namespace {

struct Col {
  QVector v;
  std::size_t pivot = 0;
};

bool is_zero(const QVector& v) {
  return std::all_of(v.begin(), v.end(), [](const Rational& x) { return x == 0; });
}

// Subtract multiples of the kept columns (in order) so v vanishes at their
// pivot rows.
void reduce(QVector& v, const std::vector<Col>& kept) {
  for (const auto& k : kept) {
    if (v[k.pivot] == 0) continue;
    const Rational f = v[k.pivot] / k.v[k.pivot];
    for (std::size_t i = 0; i < v.size(); ++i) v[i] -= f * k.v[i];
  }
}

// Reduce, then keep v with its pivot scaled to ±1 unless it vanished.
void absorb(QVector v, std::vector<Col>& kept, const std::vector<Col>& also) {
  reduce(v, also);
  reduce(v, kept);
  if (is_zero(v)) return;
  std::size_t p = 0;
  while (v[p] == 0) ++p;
  const Rational s = abs(v[p]);
  for (auto& x : v) x /= s;
  kept.push_back({std::move(v), p});
}

QVector column(const QMatrix& m, std::size_t j) {
  QVector v(m.rows());
  for (std::size_t i = 0; i < m.rows(); ++i) v[i] = m(i, j);
  return v;
}

GammaPoint assemble(std::size_t n, const std::vector<Col>& om, const QVector& st,
                    const std::vector<Col>& ep) {
  GammaPoint g;
  g.n = n;
  g.inf = om.size();
  g.eps = ep.size();
  g.coeffs = QMatrix(n, g.width());
  for (std::size_t i = 0; i < n; ++i) {
    for (std::size_t j = 0; j < om.size(); ++j) g.coeffs(i, j) = om[j].v[i];
    g.coeffs(i, g.inf) = st[i];
    for (std::size_t j = 0; j < ep.size(); ++j) g.coeffs(i, g.inf + 1 + j) = ep[j].v[i];
  }
  return g;
}

}  // namespace

GammaType gt_make(std::size_t inf, std::size_t eps, QMatrix coeffs) {
  require(coeffs.cols() == inf + 1 + eps, ErrorCode::kDimensionMismatch,
          "coefficient width must be inf + 1 + eps");
  GammaType t;
  t.point.n = coeffs.rows();
  t.point.inf = inf;
  t.point.eps = eps;
  t.point.coeffs = std::move(coeffs);
  return t;
}

GammaType gt_constant(const QVector& c) {
  QMatrix m(c.size(), 1);
  for (std::size_t i = 0; i < c.size(); ++i) m(i, 0) = c[i];
  return gt_make(0, 0, std::move(m));
}

GammaPoint gt_canonical(const GammaType& p) {
  const GammaPoint& g = p.point;
  std::vector<Col> om, ep;
  for (std::size_t j = 0; j < g.inf; ++j) absorb(column(g.coeffs, j), om, {});
  QVector st = column(g.coeffs, g.std_col());
  reduce(st, om);
  for (std::size_t j = 0; j < g.eps; ++j) absorb(column(g.coeffs, g.inf + 1 + j), ep, om);
  return assemble(g.n, om, st, ep);
}

bool gt_equal(const GammaType& p, const GammaType& q) {
  return gt_canonical(p) == gt_canonical(q);
}

GammaType gt_push(const GammaType& p, const QMatrix& a, const QVector& c) {
  require(a.cols() == p.point.n && c.size() == a.rows(), ErrorCode::kDimensionMismatch,
          "push map shape");
  QMatrix m = a * p.point.coeffs;
  for (std::size_t i = 0; i < c.size(); ++i) m(i, p.point.std_col()) += c[i];
  return gt_make(p.point.inf, p.point.eps, std::move(m));
}

GammaType gt_product(const GammaType& p, const GammaType& q) {
  const GammaPoint& a = p.point;
  const GammaPoint& b = q.point;
  // Columns: ω(p), ω(q), 1, ε(q), ε(p).
  const std::size_t inf = a.inf + b.inf, eps = a.eps + b.eps;
  QMatrix m(a.n + b.n, inf + 1 + eps);
  for (std::size_t i = 0; i < a.n; ++i) {
    for (std::size_t j = 0; j < a.inf; ++j) m(i, j) = a.coeffs(i, j);
    m(i, inf) = a.coeffs(i, a.inf);
    for (std::size_t j = 0; j < a.eps; ++j) m(i, inf + 1 + b.eps + j) = a.coeffs(i, a.inf + 1 + j);
  }
  for (std::size_t i = 0; i < b.n; ++i) {
    for (std::size_t j = 0; j < b.inf; ++j) m(a.n + i, a.inf + j) = b.coeffs(i, j);
    m(a.n + i, inf) = b.coeffs(i, b.inf);
    for (std::size_t j = 0; j < b.eps; ++j) m(a.n + i, inf + 1 + j) = b.coeffs(i, b.inf + 1 + j);
  }
  return gt_make(inf, eps, std::move(m));
}

std::optional<QVector> gt_limit(const GammaType& p) {
  const GammaPoint g = gt_canonical(p);
  if (g.inf > 0) return std::nullopt;
  return column(g.coeffs, g.std_col());
}

Decomposition gt_decompose(const GammaType& p) {
  const GammaPoint g = gt_canonical(p);
  const std::size_t n = g.n;
  QMatrix omega(n, g.inf);
  for (std::size_t i = 0; i < n; ++i) {
    for (std::size_t j = 0; j < g.inf; ++j) omega(i, j) = g.coeffs(i, j);
  }
  Decomposition d;
  d.T = QMatrix(n, n);
  // Rows a with a·Ω = 0.
  const QMatrix ker = g.inf == 0 ? q_identity(n) : kernel_rows(omega.transpose());
  d.finite = ker.rows();
  for (std::size_t r = 0; r < ker.rows(); ++r) {
    for (std::size_t j = 0; j < n; ++j) d.T(r, j) = ker(r, j);
  }
  // Unit rows at the pivot rows of the ω block complement the kernel; each is
  // signed so its leading ω coefficient is positive.
  std::size_t r = ker.rows();
  for (std::size_t j = 0; j < g.inf; ++j) {
    std::size_t piv = 0;
    while (g.coeffs(piv, j) == 0) ++piv;
    std::size_t lead = 0;
    while (g.coeffs(piv, lead) == 0) ++lead;
    d.T(r, piv) = g.coeffs(piv, lead) > 0 ? 1 : -1;
    ++r;
  }
  return d;
}

std::pair<QVector, GammaType> gt_translate0(const GammaType& p) {
  QVector c(p.point.n);
  for (std::size_t i = 0; i < p.point.n; ++i) c[i] = -p.point.coeffs(i, p.point.std_col());
  return {c, gt_push(p, q_identity(p.point.n), c)};
}

bool gt_stab_member(const GammaType& r, const QVector& c) {
  require(c.size() == r.point.n, ErrorCode::kDimensionMismatch, "translation length");
  return gt_equal(gt_push(r, q_identity(r.point.n), c), r);
}

QMatrix gt_stabilizer_basis(const GammaType& r) {
  const GammaPoint g = gt_canonical(r);
  QMatrix b(g.n, g.inf);
  for (std::size_t i = 0; i < g.n; ++i) {
    for (std::size_t j = 0; j < g.inf; ++j) b(i, j) = g.coeffs(i, j);
  }
  return b;
}

ScaleElem gt_affine_value(const GammaPoint& g, const QVector& a, const Rational& b) {
  require(a.size() == g.n, ErrorCode::kDimensionMismatch, "functional length");
  ScaleElem x(g.width());
  for (std::size_t j = 0; j < g.width(); ++j) {
    for (std::size_t i = 0; i < g.n; ++i) x[j] += a[i] * g.coeffs(i, j);
  }
  x[g.std_col()] += b;
  return x;
}

int scale_sign(const ScaleElem& x) {
  for (const auto& c : x) {
    if (c != 0) return c > 0 ? 1 : -1;
  }
  return 0;
}

bool scale_less(const ScaleElem& x, const ScaleElem& y) {
  require(x.size() == y.size(), ErrorCode::kDimensionMismatch, "scale widths differ");
  for (std::size_t i = 0; i < x.size(); ++i) {
    if (x[i] != y[i]) return x[i] < y[i];
  }
  return false;
}

}  // namespace acvf
