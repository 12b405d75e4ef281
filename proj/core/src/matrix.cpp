#include "acvf/matrix.hpp"

namespace acvf {

namespace {

/// Row of minimal valuation among rows [from, rows) in column j, skipping
/// zeros. Returns rows() when the column is zero there.
std::size_t pick_pivot(const FieldMatrix& m, std::size_t from, std::size_t j) {
  std::size_t best = m.rows();
  GammaVal best_val = GammaVal::infinity();
  for (std::size_t i = from; i < m.rows(); ++i) {
    const GammaVal v = fe_val(m(i, j));
    if (v.is_infinite()) continue;
    if (best == m.rows() || v < best_val) {
      best = i;
      best_val = v;
    }
  }
  return best;
}

/// Forward elimination of `m` (in place). Returns pivot columns, one per
/// nonzero row of the resulting echelon form. Entries below pivots are
/// cleared; `extra` columns (from index `ncols`) ride along.
std::vector<std::size_t> echelonize(FieldMatrix& m, std::size_t ncols) {
  std::vector<std::size_t> pivots;
  std::size_t r = 0;
  for (std::size_t j = 0; j < ncols && r < m.rows(); ++j) {
    const std::size_t p = pick_pivot(m, r, j);
    if (p == m.rows()) continue;
    m.swap_rows(r, p);
    const FieldElem inv = m(r, j).inverse();
    for (std::size_t i = r + 1; i < m.rows(); ++i) {
      if (m(i, j).is_zero()) continue;
      const FieldElem f = m(i, j) * inv;
      for (std::size_t k = j; k < m.cols(); ++k) {
        if (!m(r, k).is_literal_zero()) m(i, k) -= f * m(r, k);
      }
    }
    pivots.push_back(j);
    ++r;
  }
  return pivots;
}

}  // namespace

std::optional<FieldVector> span_solve(const FieldMatrix& a,
                                      const FieldVector& target,
                                      std::size_t* pivot_count);

Backend backend_of(const FieldMatrix& a) {
  return a.rows() > 0 && a.cols() > 0 ? a(0, 0).backend() : Backend::kRatFunc;
}

FieldMatrix identity(Backend b, std::size_t n) {
  FieldMatrix m(n, n, FieldElem::zero(b));
  for (std::size_t i = 0; i < n; ++i) m(i, i) = FieldElem::one(b);
  return m;
}

FieldMatrix zeros(Backend b, std::size_t rows, std::size_t cols) {
  return FieldMatrix(rows, cols, FieldElem::zero(b));
}

FieldMatrix diagonal(const FieldVector& d) {
  const Backend b = d.empty() ? Backend::kRatFunc : d[0].backend();
  FieldMatrix m(d.size(), d.size(), FieldElem::zero(b));
  for (std::size_t i = 0; i < d.size(); ++i) m(i, i) = d[i];
  return m;
}

FieldMatrix diag_t_powers(Backend b, const QVector& exps) {
  FieldMatrix m(exps.size(), exps.size(), FieldElem::zero(b));
  for (std::size_t i = 0; i < exps.size(); ++i) {
    m(i, i) = FieldElem::monomial(b, Rational(1), exps[i]);
  }
  return m;
}

FieldMatrix operator*(const FieldMatrix& a, const FieldMatrix& b) {
  require(a.cols() == b.rows(), ErrorCode::kDimensionMismatch, "matrix product shape");
  const Backend be = backend_of(a);
  FieldMatrix out(a.rows(), b.cols(), FieldElem::zero(be));
  for (std::size_t i = 0; i < a.rows(); ++i) {
    for (std::size_t k = 0; k < a.cols(); ++k) {
      const FieldElem& x = a(i, k);
      if (x.is_literal_zero()) continue;
      for (std::size_t j = 0; j < b.cols(); ++j) {
        if (b(k, j).is_literal_zero()) continue;
        out(i, j) += x * b(k, j);
      }
    }
  }
  return out;
}

FieldVector operator*(const FieldMatrix& a, const FieldVector& x) {
  require(a.cols() == x.size(), ErrorCode::kDimensionMismatch, "matrix-vector shape");
  const Backend be = x.empty() ? backend_of(a) : x[0].backend();
  FieldVector out(a.rows(), FieldElem::zero(be));
  for (std::size_t i = 0; i < a.rows(); ++i) {
    for (std::size_t k = 0; k < a.cols(); ++k) {
      if (a(i, k).is_literal_zero() || x[k].is_literal_zero()) continue;
      out[i] += a(i, k) * x[k];
    }
  }
  return out;
}

FieldMatrix operator+(const FieldMatrix& a, const FieldMatrix& b) {
  require(a.rows() == b.rows() && a.cols() == b.cols(), ErrorCode::kDimensionMismatch,
          "matrix sum shape");
  FieldMatrix out = a;
  for (std::size_t i = 0; i < a.rows(); ++i) {
    for (std::size_t j = 0; j < a.cols(); ++j) out(i, j) += b(i, j);
  }
  return out;
}

FieldMatrix operator-(const FieldMatrix& a, const FieldMatrix& b) {
  require(a.rows() == b.rows() && a.cols() == b.cols(), ErrorCode::kDimensionMismatch,
          "matrix difference shape");
  FieldMatrix out = a;
  for (std::size_t i = 0; i < a.rows(); ++i) {
    for (std::size_t j = 0; j < a.cols(); ++j) out(i, j) -= b(i, j);
  }
  return out;
}

FieldMatrix inverse(const FieldMatrix& a) {
  require(a.is_square(), ErrorCode::kDimensionMismatch, "inverse of non-square matrix");
  const std::size_t n = a.rows();
  const Backend be = backend_of(a);
  FieldMatrix m(n, 2 * n, FieldElem::zero(be));
  for (std::size_t i = 0; i < n; ++i) {
    for (std::size_t j = 0; j < n; ++j) m(i, j) = a(i, j);
    m(i, n + i) = FieldElem::one(be);
  }
  const auto pivots = echelonize(m, n);
  if (pivots.size() < n) raise(ErrorCode::kSingularMatrix, "matrix is singular");
  for (std::size_t r = n; r-- > 0;) {
    const FieldElem inv = m(r, r).inverse();
    for (std::size_t k = r; k < 2 * n; ++k) m(r, k) *= inv;
    for (std::size_t i = 0; i < r; ++i) {
      if (m(i, r).is_zero()) continue;
      const FieldElem f = m(i, r);
      for (std::size_t k = r; k < 2 * n; ++k) {
        if (!m(r, k).is_literal_zero()) m(i, k) -= f * m(r, k);
      }
    }
  }
  FieldMatrix out(n, n);
  for (std::size_t i = 0; i < n; ++i) {
    for (std::size_t j = 0; j < n; ++j) out(i, j) = m(i, n + j);
  }
  return out;
}

FieldVector solve(const FieldMatrix& a, const FieldVector& b) {
  require(a.is_square(), ErrorCode::kDimensionMismatch, "solve needs a square matrix");
  std::size_t piv = 0;
  auto x = span_solve(a, b, &piv);
  if (piv < a.rows() || !x) raise(ErrorCode::kSingularMatrix, "matrix is singular");
  return *x;
}

FieldVector solve_upper(const FieldMatrix& u, const FieldVector& b) {
  const std::size_t n = u.rows();
  require(u.is_square() && b.size() == n, ErrorCode::kDimensionMismatch,
          "triangular solve shape");
  FieldVector x(n);
  for (std::size_t i = n; i-- > 0;) {
    FieldElem acc = b[i];
    for (std::size_t j = i + 1; j < n; ++j) {
      if (!u(i, j).is_literal_zero() && !x[j].is_literal_zero()) acc -= u(i, j) * x[j];
    }
    if (u(i, i).is_zero()) raise(ErrorCode::kSingularMatrix, "zero on the diagonal");
    x[i] = acc / u(i, i);
  }
  return x;
}

FieldMatrix solve_upper(const FieldMatrix& u, const FieldMatrix& b) {
  require(b.rows() == u.rows(), ErrorCode::kDimensionMismatch, "triangular solve shape");
  FieldMatrix x = b;
  for (std::size_t j = 0; j < b.cols(); ++j) x.set_col(j, solve_upper(u, b.col(j)));
  return x;
}

std::optional<Integer> exact_root_degree(const FieldMatrix& a) {
  if (backend_of(a) != Backend::kPuiseux) return std::nullopt;
  Integer den = 1;
  for (std::size_t i = 0; i < a.rows(); ++i) {
    for (std::size_t j = 0; j < a.cols(); ++j) {
      const Puiseux& p = a(i, j).as_puiseux();
      if (p.prec.is_finite()) return std::nullopt;
      for (const auto& term : p.terms) {
        mpz_lcm(den.get_mpz_t(), den.get_mpz_t(), term.exp.get_den_mpz_t());
      }
    }
  }
  return den;
}

FieldMatrix to_ratfunc_in_root(const FieldMatrix& a, const Integer& d) {
  FieldMatrix out(a.rows(), a.cols(), FieldElem::zero(Backend::kRatFunc));
  for (std::size_t i = 0; i < a.rows(); ++i) {
    for (std::size_t j = 0; j < a.cols(); ++j) out(i, j) = to_ratfunc_in_root(a(i, j), d);
  }
  return out;
}

FieldMatrix from_ratfunc_in_root(const FieldMatrix& a, const Integer& d) {
  FieldMatrix out(a.rows(), a.cols(), FieldElem::zero(Backend::kPuiseux));
  for (std::size_t i = 0; i < a.rows(); ++i) {
    for (std::size_t j = 0; j < a.cols(); ++j) out(i, j) = from_ratfunc_in_root(a(i, j), d);
  }
  return out;
}

std::size_t rank(const FieldMatrix& a) {
  // Exact series: rank over ℚ(t^{1/D}) is rank over the series field.
  if (auto d = exact_root_degree(a)) return rank(to_ratfunc_in_root(a, *d));
  FieldMatrix m = a;
  return echelonize(m, m.cols()).size();
}

bool is_invertible(const FieldMatrix& a) {
  return a.is_square() && rank(a) == a.rows();
}

bool is_upper_triangular(const FieldMatrix& a) {
  if (!a.is_square()) return false;
  for (std::size_t i = 0; i < a.rows(); ++i) {
    for (std::size_t j = 0; j < i; ++j) {
      if (!a(i, j).is_zero()) return false;
    }
  }
  return true;
}

std::optional<FieldVector> span_solve(const FieldMatrix& a,
                                      const FieldVector& target,
                                      std::size_t* pivot_count) {
  require(a.rows() == target.size(), ErrorCode::kDimensionMismatch, "span solve shape");
  const std::size_t n = a.cols();
  const Backend be = target.empty() ? backend_of(a) : target[0].backend();
  FieldMatrix m(a.rows(), n + 1, FieldElem::zero(be));
  for (std::size_t i = 0; i < a.rows(); ++i) {
    for (std::size_t j = 0; j < n; ++j) m(i, j) = a(i, j);
    m(i, n) = target[i];
  }
  const auto pivots = echelonize(m, n);
  if (pivot_count != nullptr) *pivot_count = pivots.size();
  for (std::size_t i = pivots.size(); i < m.rows(); ++i) {
    if (!m(i, n).is_zero()) return std::nullopt;
  }
  FieldVector x(n, FieldElem::zero(be));
  for (std::size_t r = pivots.size(); r-- > 0;) {
    const std::size_t j = pivots[r];
    FieldElem acc = m(r, n);
    for (std::size_t k = j + 1; k < n; ++k) {
      if (!m(r, k).is_literal_zero() && !x[k].is_literal_zero()) acc -= m(r, k) * x[k];
    }
    x[j] = acc / m(r, j);
  }
  return x;
}

std::optional<FieldVector> solve_in_span(const FieldMatrix& a,
                                         const FieldVector& target) {
  return span_solve(a, target, nullptr);
}

FieldMatrix from_columns(const std::vector<FieldVector>& cols) {
  if (cols.empty()) return {};
  FieldMatrix m(cols[0].size(), cols.size());
  for (std::size_t j = 0; j < cols.size(); ++j) {
    require(cols[j].size() == cols[0].size(), ErrorCode::kDimensionMismatch,
            "columns of unequal length");
    m.set_col(j, cols[j]);
  }
  return m;
}

GammaVal min_val(const FieldVector& v) {
  GammaVal m = GammaVal::infinity();
  for (const auto& x : v) m = min(m, fe_val(x));
  return m;
}

// ------------------------------------------------------------------ over ℚ

QMatrix q_identity(std::size_t n) {
  QMatrix m(n, n, Rational(0));
  for (std::size_t i = 0; i < n; ++i) m(i, i) = 1;
  return m;
}

QMatrix operator*(const QMatrix& a, const QMatrix& b) {
  require(a.cols() == b.rows(), ErrorCode::kDimensionMismatch, "matrix product shape");
  QMatrix out(a.rows(), b.cols(), Rational(0));
  for (std::size_t i = 0; i < a.rows(); ++i) {
    for (std::size_t k = 0; k < a.cols(); ++k) {
      if (a(i, k) == 0) continue;
      for (std::size_t j = 0; j < b.cols(); ++j) out(i, j) += a(i, k) * b(k, j);
    }
  }
  return out;
}

QVector operator*(const QMatrix& a, const QVector& x) {
  require(a.cols() == x.size(), ErrorCode::kDimensionMismatch, "matrix-vector shape");
  QVector out(a.rows(), Rational(0));
  for (std::size_t i = 0; i < a.rows(); ++i) {
    for (std::size_t k = 0; k < a.cols(); ++k) out[i] += a(i, k) * x[k];
  }
  return out;
}

QMatrix rref(const QMatrix& a, std::vector<std::size_t>* pivots) {
  QMatrix m = a;
  std::vector<std::size_t> piv;
  std::size_t r = 0;
  for (std::size_t j = 0; j < m.cols() && r < m.rows(); ++j) {
    std::size_t p = r;
    while (p < m.rows() && m(p, j) == 0) ++p;
    if (p == m.rows()) continue;
    m.swap_rows(r, p);
    const Rational inv = 1 / m(r, j);
    for (std::size_t k = j; k < m.cols(); ++k) m(r, k) *= inv;
    for (std::size_t i = 0; i < m.rows(); ++i) {
      if (i == r || m(i, j) == 0) continue;
      const Rational f = m(i, j);
      for (std::size_t k = j; k < m.cols(); ++k) m(i, k) -= f * m(r, k);
    }
    piv.push_back(j);
    ++r;
  }
  if (pivots != nullptr) *pivots = piv;
  return m;
}

std::size_t rank(const QMatrix& a) {
  std::vector<std::size_t> piv;
  rref(a, &piv);
  return piv.size();
}

QMatrix kernel_rows(const QMatrix& a) {
  std::vector<std::size_t> piv;
  const QMatrix r = rref(a, &piv);
  std::vector<bool> is_pivot(a.cols(), false);
  for (auto p : piv) is_pivot[p] = true;
  std::vector<QVector> basis;
  for (std::size_t f = 0; f < a.cols(); ++f) {
    if (is_pivot[f]) continue;
    QVector v(a.cols(), Rational(0));
    v[f] = 1;
    for (std::size_t i = 0; i < piv.size(); ++i) v[piv[i]] = -r(i, f);
    basis.push_back(std::move(v));
  }
  QMatrix k(basis.size(), a.cols(), Rational(0));
  for (std::size_t i = 0; i < basis.size(); ++i) {
    for (std::size_t j = 0; j < a.cols(); ++j) k(i, j) = basis[i][j];
  }
  return basis.empty() ? k : rref(k);
}

std::optional<QMatrix> q_inverse(const QMatrix& a) {
  if (!a.is_square()) return std::nullopt;
  const std::size_t n = a.rows();
  QMatrix aug(n, 2 * n, Rational(0));
  for (std::size_t i = 0; i < n; ++i) {
    for (std::size_t j = 0; j < n; ++j) aug(i, j) = a(i, j);
    aug(i, n + i) = 1;
  }
  std::vector<std::size_t> piv;
  const QMatrix r = rref(aug, &piv);
  if (piv.size() < n || piv[n - 1] != n - 1) return std::nullopt;
  QMatrix out(n, n);
  for (std::size_t i = 0; i < n; ++i) {
    for (std::size_t j = 0; j < n; ++j) out(i, j) = r(i, n + j);
  }
  return out;
}

bool q_is_invertible(const QMatrix& a) { return a.is_square() && rank(a) == a.rows(); }

std::optional<QVector> q_solve_in_span(const QMatrix& a, const QVector& target) {
  require(a.rows() == target.size(), ErrorCode::kDimensionMismatch, "span solve shape");
  QMatrix aug(a.rows(), a.cols() + 1);
  for (std::size_t i = 0; i < a.rows(); ++i) {
    for (std::size_t j = 0; j < a.cols(); ++j) aug(i, j) = a(i, j);
    aug(i, a.cols()) = target[i];
  }
  std::vector<std::size_t> pivots;
  const QMatrix r = rref(aug, &pivots);
  QVector x(a.cols());
  for (std::size_t k = 0; k < pivots.size(); ++k) {
    if (pivots[k] == a.cols()) return std::nullopt;
    x[pivots[k]] = r(k, a.cols());
  }
  return x;
}

}  // namespace acvf
