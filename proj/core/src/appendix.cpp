#include "acvf/appendix.hpp"

#include <algorithm>
#include <array>

#include "acvf/lattice.hpp"
#include "acvf/random.hpp"

namespace acvf {

namespace {

struct Parts {
  std::vector<Poly> free;
  std::vector<Poly> o;  // t^γ·B_i
};

Parts split(const ModuleDesc& l, const PolySpace& h) {
  require(l.n == h.dim(), ErrorCode::kDimensionMismatch, "module dimension differs from the space");
  require(mod_predicates(l).semilattice, ErrorCode::kNotSemilattice, "not a semi-lattice");
  const ModuleDesc c = mod_canonical(l);
  Parts p;
  for (std::size_t j = 0; j < c.n; ++j) {
    FieldVector col = c.basis.col(j);
    if (c.signature[j].tag == Tag::kFree) {
      p.free.push_back(coords_poly(col, h));
    } else {
      for (auto& x : col) x = x.shifted(c.signature[j].gamma);
      p.o.push_back(coords_poly(col, h));
    }
  }
  return p;
}

Rational residue_of(const FieldElem& x) {
  const GammaVal v = fe_val(x);
  return !v.is_infinite() && v.value() == 0 ? fe_residue(x) : Rational(0);
}

std::optional<QVector> residues(const Parts& p, const FieldVector& point) {
  for (const auto& g : p.free) {
    if (!poly_eval(g, point).is_zero()) return std::nullopt;
  }
  QVector z;
  for (const auto& f : p.o) {
    const FieldElem y = poly_eval(f, point);
    if (fe_val(y) < GammaVal(0)) return std::nullopt;
    z.push_back(residue_of(y));
  }
  return z;
}

QMatrix rows_of(const std::vector<QVector>& rows, std::size_t n) {
  QMatrix m(rows.size(), n);
  for (std::size_t i = 0; i < rows.size(); ++i) {
    for (std::size_t j = 0; j < n; ++j) m(i, j) = rows[i][j];
  }
  return m;
}

// Greedy independent subset; collects into `pts`/`zs`.
void offer(const Parts& p, const FieldVector& point, std::vector<FieldVector>& pts,
           std::vector<QVector>& zs) {
  const auto z = residues(p, point);
  if (!z) return;
  std::vector<QVector> trial = zs;
  trial.push_back(*z);
  if (rank(rows_of(trial, p.o.size())) == trial.size()) {
    pts.push_back(point);
    zs = std::move(trial);
  }
}

Poly shifted_power(std::size_t nvars, const FieldElem& c, unsigned i) {
  Poly x;
  x.nvars = nvars;
  x.terms.emplace(Exponent{i}, FieldElem::one(c.backend()));
  return poly_recenter(x, {-c});
}

// "Center of mass" of the roots of g: exact for g = λ(x − c)^e.
std::optional<FieldElem> candidate_center(const Poly& g) {
  const unsigned e = poly_degree(g);
  if (e == 0) return std::nullopt;
  const FieldElem& lead = g.terms.at(Exponent{e});
  auto it = g.terms.find(Exponent{e - 1});
  if (it == g.terms.end()) return FieldElem::zero(lead.backend());
  return -(it->second / lead).scaled(Rational(1, e));
}

MembershipVerdict no_empty(std::string method, std::string reason) {
  MembershipVerdict v;
  v.verdict = Verdict::kNo;
  v.method = std::move(method);
  v.empty_image = true;
  v.reason = std::move(reason);
  return v;
}

MembershipVerdict decide_diagonal(const ModuleDesc& l, const PolySpace& h, const Parts& parts,
                                  DiagonalForm form) {
  const auto& w = form.weights;
  const FieldElem& c = form.center;
  const Backend b = c.backend();
  MembershipVerdict out;
  out.method = "exact";
  out.diagonal = form;
  if (!w[0]) return no_empty("exact", "the constants lie in the K-space part");
  if (*w[0] < 0) return no_empty("exact", "the constant t^w with w < 0 lies in Λ");

  std::vector<unsigned> hit;
  std::optional<Rational> vstar;  // valuation of x − c at which residues appear
  bool pinned = false;            // some (x − c)^i, i ≥ 1, is in the K-space part
  for (unsigned i = 1; i <= h.degree; ++i) pinned = pinned || !w[i];
  if (!pinned) {
    for (unsigned i = 1; i <= h.degree; ++i) {
      const Rational v = -*w[i] / Rational(i);
      if (!vstar || v > *vstar) vstar = v;
    }
    for (unsigned i = 1; i <= h.degree; ++i) {
      if (*w[i] + Rational(i) * *vstar == 0) hit.push_back(i);
    }
  }
  // x = c is admissible; it is the only admissible point when pinned.
  if (*w[0] == 0) hit.insert(hit.begin(), 0);

  std::vector<unsigned> o_indices;
  for (unsigned i = 0; i <= h.degree; ++i) {
    if (w[i]) o_indices.push_back(i);
  }
  for (unsigned i : o_indices) {
    if (std::find(hit.begin(), hit.end(), i) == hit.end()) out.forced_zero.push_back(i);
  }
  if (!out.forced_zero.empty()) {
    out.verdict = Verdict::kNo;
    out.reason = "residues vanish identically at the listed powers of (x - c)";
    return out;
  }
  // Every weight is −i·γ: witnesses c + a·t^γ, a = 0, 1, …
  const Rational g = vstar.value_or(0);
  std::vector<FieldVector> pts;
  std::vector<QVector> zs;
  for (long a = 0; a < static_cast<long>(o_indices.size()); ++a) {
    offer(parts, {c + FieldElem::monomial(b, a, g)}, pts, zs);
  }
  if (zs.size() != parts.o.size() || !verify_witnesses(l, h, pts)) {
    raise(ErrorCode::kMalformed, "diagonal witnesses failed to verify");
  }
  out.verdict = Verdict::kYes;
  out.witnesses = std::move(pts);
  out.residues = rows_of(zs, parts.o.size());
  out.reason = "weights are -i*gamma for a single gamma";
  return out;
}

}  // namespace

std::string_view verdict_name(Verdict v) {
  switch (v) {
    case Verdict::kYes: return "YES";
    case Verdict::kNo: return "NO";
    case Verdict::kUndecided: return "UNDECIDED";
  }
  return "?";
}

std::optional<QVector> residue_vector(const ModuleDesc& l, const PolySpace& h, const FieldVector& point) {
  require(point.size() == h.nvars, ErrorCode::kDimensionMismatch, "point length");
  return residues(split(l, h), point);
}

bool verify_witnesses(const ModuleDesc& l, const PolySpace& h, const std::vector<FieldVector>& points) {
  const Parts p = split(l, h);
  std::vector<QVector> zs;
  for (const auto& pt : points) {
    require(pt.size() == h.nvars, ErrorCode::kDimensionMismatch, "point length");
    const auto z = residues(p, pt);
    if (!z) return false;
    zs.push_back(*z);
  }
  return rank(rows_of(zs, p.o.size())) == p.o.size();
}

std::optional<DiagonalForm> diagonal_form(const ModuleDesc& l, const PolySpace& h) {
  if (h.nvars != 1) return std::nullopt;
  require(l.n == h.dim(), ErrorCode::kDimensionMismatch, "module dimension differs from the space");
  std::vector<FieldElem> candidates;
  for (std::size_t j = 0; j < l.n; ++j) {
    const auto c = candidate_center(coords_poly(l.basis.col(j), h));
    if (c && std::find(candidates.begin(), candidates.end(), *c) == candidates.end()) {
      candidates.push_back(*c);
    }
  }
  const Backend b = backend_of(l.basis);
  for (const auto& c : candidates) {
    DiagonalForm form{c, {}};
    std::vector<Component> sig;
    for (unsigned i = 0; i <= h.degree; ++i) {
      const GammaVal hv = semilattice_val(l, poly_coords(shifted_power(1, c, i), h, b));
      if (hv.is_infinite()) {
        form.weights.emplace_back();
        sig.push_back({Tag::kFree, 0});
      } else {
        form.weights.emplace_back(-hv.value());
        sig.push_back({Tag::kOShift, -hv.value()});
      }
    }
    if (mod_equal(mod_make(shifted_power_basis(h, {c}), std::move(sig)), l)) return form;
  }
  return std::nullopt;
}

MembershipVerdict appendix_member(const ModuleDesc& l, const PolySpace& h, std::size_t budget,
                                  std::uint64_t seed) {
  const Parts parts = split(l, h);
  const Backend b = backend_of(l.basis);
  const std::size_t n = parts.o.size();

  if (auto form = diagonal_form(l, h)) return decide_diagonal(l, h, parts, std::move(*form));

  Poly one;
  one.nvars = h.nvars;
  one.terms.emplace(Exponent(h.nvars, 0), FieldElem::one(b));
  if (semilattice_val(l, poly_coords(one, h, b)).is_infinite()) {
    return no_empty("exact", "the constants lie in the K-space part");
  }

  MembershipVerdict out;
  std::vector<FieldVector> pts;
  std::vector<QVector> zs;
  auto finish = [&](std::string method) {
    out.method = std::move(method);
    out.residues = rows_of(zs, n);
    out.witnesses = pts;
    if (zs.size() == n && verify_witnesses(l, h, pts)) {
      out.verdict = Verdict::kYes;
      out.reason = "residue vectors of the witnesses span";
      return true;
    }
    return false;
  };

  // Polydisc guess from the degree ≤ 1 block: Λ ∩ H_1 = O ⊕ Σ t^{-r_i}·O·(x_i − a_i).
  if (parts.free.empty()) {
    const LatticeCode code = lattice_of(l);
    FieldVector center(h.nvars);
    QVector radii(h.nvars);
    for (std::size_t i = 0; i < h.nvars; ++i) {
      center[i] = -code.U(0, i + 1);
      radii[i] = code.gamma[0] - code.gamma[i + 1];
    }
    for (const auto& u : PolySpace{h.nvars, h.degree}.monomials()) {
      FieldVector pt = center;
      for (std::size_t i = 0; i < h.nvars; ++i) pt[i] += FieldElem::monomial(b, u[i], radii[i]);
      offer(parts, pt, pts, zs);
      if (zs.size() == n) break;
    }
    if (finish("jd_witness")) return out;
  }

  // Monomial points c_i = q·t^{k/den}.
  static const std::array<Rational, 7> kCoefficients{0, 1, -1, 2, -2, Rational(1, 2), 3};
  const long bound = std::min<long>(static_cast<long>(budget), 6);
  Rng rng(seed);
  for (std::size_t s = 0; s < budget && zs.size() < n; ++s) {
    FieldVector pt(h.nvars);
    for (auto& x : pt) {
      const long den = b == Backend::kRatFunc ? 1 : rng.uniform(1, 3);
      Rational e(rng.uniform(-bound, bound), den);
      e.canonicalize();
      x = FieldElem::monomial(b, rng.pick(kCoefficients), e);
    }
    offer(parts, pt, pts, zs);
  }
  if (finish("sampling")) return out;
  out.verdict = Verdict::kUndecided;
  out.reason = "no spanning witness set within the budget";
  return out;
}

}  // namespace acvf
