#include "acvf/lattice.hpp"

#include "tseries.hpp"

namespace acvf {

namespace {

using detail::TSer;

using SMatrix = std::vector<std::vector<TSer>>;

// Column operation col_j += f·col_i on rows [0, rows).
void add_col(SMatrix& m, std::size_t j, std::size_t i, const TSer& f, std::size_t rows) {
  for (std::size_t r = 0; r < rows; ++r) {
    if (!m[r][i].exact_zero()) m[r][j] = m[r][j] + f * m[r][i];
  }
}

// One elimination pass at absolute working precision `cap` (in s-exponents).
// Throws PRECISION_EXHAUSTED when the truncation is too coarse to decide a
// pivot or a section; the output never depends on unknown digits.
std::pair<SMatrix, std::vector<long>> eliminate(SMatrix m, long cap) {
  const std::size_t n = m.size();
  std::vector<long> gamma(n);
  for (std::size_t k = n; k-- > 0;) {
    // Rows below k vanish in columns 0..k, so column operations among those
    // columns only touch rows 0..k.
    std::size_t piv = n;
    long best = 0;
    bool all_zero = true;
    for (std::size_t j = 0; j <= k; ++j) {
      const TSer& x = m[k][j];
      if (x.exact_zero()) continue;
      all_zero = false;
      if (x.known() && (piv == n || x.lo < best)) {
        piv = j;
        best = x.lo;
      }
    }
    require(!all_zero, ErrorCode::kSingularMatrix, "matrix is singular");
    require(piv != n, ErrorCode::kPrecisionExhausted, "pivot undetermined");
    for (std::size_t j = 0; j <= k; ++j) {
      const TSer& x = m[k][j];
      require(x.exact_zero() || x.known() || x.prec > best, ErrorCode::kPrecisionExhausted,
              "pivot undetermined");
    }
    for (std::size_t r = 0; r <= k; ++r) std::swap(m[r][piv], m[r][k]);
    gamma[k] = best;
    const TSer unit = TSer::monomial(1, best) * m[k][k].inverse(cap);
    for (std::size_t r = 0; r < k; ++r) {
      if (!m[r][k].exact_zero()) m[r][k] = m[r][k] * unit;
    }
    m[k][k] = TSer::monomial(1, best);
    for (std::size_t j = 0; j < k; ++j) {
      if (m[k][j].exact_zero()) continue;
      const TSer f = -(m[k][j].shifted(-best));
      add_col(m, j, k, f, k);
      m[k][j] = TSer{};
    }
  }
  // Reduce every above-diagonal entry (i, j) to its section below γ_i by
  // O-multiples of column i, working up each column.
  for (std::size_t j = 1; j < n; ++j) {
    for (std::size_t i = j; i-- > 0;) {
      const TSer x = m[i][j];
      if (x.exact_zero()) continue;
      const TSer sec = x.section(gamma[i]);
      if (sec == x) continue;
      add_col(m, j, i, (sec - x).shifted(-gamma[i]), i);
      m[i][j] = sec;
    }
  }
  return {std::move(m), std::move(gamma)};
}

// Least d with every exponent (and precision bound) of a PUISEUX matrix in
// (1/d)ℤ; 1 for RATFUNC.
long root_degree(const FieldMatrix& a) {
  if (backend_of(a) == Backend::kRatFunc) return 1;
  Integer den = 1;
  for (std::size_t i = 0; i < a.rows(); ++i) {
    for (std::size_t j = 0; j < a.cols(); ++j) {
      for (const auto& term : a(i, j).as_puiseux().terms) {
        mpz_lcm(den.get_mpz_t(), den.get_mpz_t(), term.exp.get_den_mpz_t());
      }
    }
  }
  require(den.fits_slong_p(), ErrorCode::kMalformed, "exponent denominators too large");
  return den.get_si();
}

}  // namespace

LatticeCode diagonalize(const FieldMatrix& a) {
  require(a.is_square() && a.rows() > 0, ErrorCode::kDimensionMismatch,
          "diagonalize needs a nonempty square matrix");
  const std::size_t n = a.rows();
  const Backend b = backend_of(a);
  const long d = root_degree(a);

  bool truncated = false;
  long lo = 0;
  bool first = true;
  for (std::size_t i = 0; i < n; ++i) {
    for (std::size_t j = 0; j < n; ++j) {
      const FieldElem& x = a(i, j);
      if (b == Backend::kPuiseux && x.as_puiseux().prec.is_finite()) {
        truncated = true;
        continue;
      }
      if (x.is_literal_zero()) continue;
      const long v = Rational(fe_val(x).value() * d).get_num().get_si();
      lo = first ? v : std::min(lo, v);
      first = false;
    }
  }
  require(!first || truncated, ErrorCode::kSingularMatrix, "matrix is singular");

  // Exact input: widen the working precision until every decision is
  // determined. Truncated input gets one pass at its own precision.
  long span = 4;
  bool checked = false;
  for (;;) {
    const long cap = truncated ? detail::kExact - 1 : lo + span;
    SMatrix m(n, std::vector<TSer>(n));
    for (std::size_t i = 0; i < n; ++i) {
      for (std::size_t j = 0; j < n; ++j) m[i][j] = detail::to_series(a(i, j), d, cap);
    }
    try {
      auto [res, gamma] = eliminate(std::move(m), cap);
      LatticeCode out;
      out.n = n;
      out.U = zeros(b, n, n);
      for (std::size_t j = 0; j < n; ++j) {
        out.U(j, j) = FieldElem::one(b);
        for (std::size_t i = 0; i < j; ++i) {
          out.U(i, j) = detail::from_series(res[i][j].shifted(-gamma[j]), b, d);
        }
        out.gamma.push_back(Rational(gamma[j], d));
        out.gamma.back().canonicalize();
      }
      out.canonical = true;
      return out;
    } catch (const Error& e) {
      if (e.code() != ErrorCode::kPrecisionExhausted || truncated) throw;
    }
    if (!checked && span > 64 * static_cast<long>(n + 1)) {
      require(is_invertible(a), ErrorCode::kSingularMatrix, "matrix is singular");
      checked = true;
    }
    span *= 2;
  }
}

FieldMatrix lat_basis(const LatticeCode& l) {
  return l.U * diag_t_powers(backend_of(l.U), l.gamma);
}

LatticeCode lat_canon(const LatticeCode& l) {
  require(l.n > 0 && l.U.rows() == l.n && l.U.cols() == l.n && l.gamma.size() == l.n,
          ErrorCode::kDimensionMismatch, "lattice code shape");
  const Backend b = backend_of(l.U);
  for (std::size_t i = 0; i < l.n; ++i) {
    require(l.U(i, i) == FieldElem::one(b), ErrorCode::kMalformed, "U needs 1's on the diagonal");
    for (std::size_t j = 0; j < i; ++j) {
      require(l.U(i, j).is_zero(), ErrorCode::kNotTriangular, "U is not upper triangular");
    }
    require_value_group(b, l.gamma[i]);
  }
  if (l.canonical) return l;
  return diagonalize(lat_basis(l));
}

bool lat_member(const LatticeCode& l, const FieldVector& x) {
  require(x.size() == l.n, ErrorCode::kDimensionMismatch, "vector length");
  const FieldVector y = solve_upper(lat_basis(l), x);
  for (const auto& yi : y) {
    if (fe_val(yi) < GammaVal(0)) return false;
  }
  return true;
}

bool lat_equal(const LatticeCode& a, const LatticeCode& b) {
  require(a.n == b.n, ErrorCode::kDimensionMismatch, "lattice dimensions differ");
  require(backend_of(a.U) == backend_of(b.U), ErrorCode::kBackendMismatch, "backends differ");
  const LatticeCode ca = lat_canon(a), cb = lat_canon(b);
  return ca.gamma == cb.gamma && ca.U == cb.U;
}

const QVector& g_invariant(const LatticeCode& l) { return l.gamma; }

ModuleDesc lat_dual(const LatticeCode& l, DualMode mode) {
  const Backend b = backend_of(l.U);
  std::vector<Component> sig;
  for (const auto& g : l.gamma) {
    if (mode == DualMode::kO) {
      sig.push_back({Tag::kOShift, -g});
    } else if (b == Backend::kRatFunc) {
      // t^{-γ}M = t^{1-γ}O when the value group is ℤ.
      sig.push_back({Tag::kOShift, 1 - g});
    } else {
      sig.push_back({Tag::kMShift, -g});
    }
  }
  return mod_make(inverse(l.U.transpose()), std::move(sig));
}

LatticeCode lattice_of(const ModuleDesc& m) {
  require(mod_predicates(m).lattice, ErrorCode::kNotSemilattice, "module is not a lattice");
  QVector g;
  for (const auto& c : m.signature) g.push_back(c.gamma);
  return diagonalize(m.basis * diag_t_powers(backend_of(m.basis), g));
}

ModuleDesc module_of(const LatticeCode& l) {
  std::vector<Component> sig;
  for (const auto& g : l.gamma) sig.push_back({Tag::kOShift, g});
  return mod_make(l.U, std::move(sig));
}

TnCode tn_code(const LatticeCode& l, const FieldVector& x) {
  require(x.size() == l.n, ErrorCode::kDimensionMismatch, "vector length");
  TnCode c;
  c.lattice = lat_canon(l);
  const FieldVector y = solve_upper(lat_basis(c.lattice), x);
  bool nonzero = false;
  for (const auto& yi : y) {
    const GammaVal v = fe_val(yi);
    require(v >= GammaVal(0), ErrorCode::kValNonzero, "point is not in the lattice");
    c.residue_vector.push_back(v == GammaVal(0) ? fe_residue(yi) : Rational(0));
    nonzero = nonzero || v == GammaVal(0);
  }
  require(nonzero, ErrorCode::kValNonzero, "point lies in MΛ");
  return c;
}

bool tn_equal(const TnCode& a, const TnCode& b) {
  return lat_equal(a.lattice, b.lattice) && a.residue_vector == b.residue_vector;
}

}  // namespace acvf
