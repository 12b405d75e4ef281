#include "acvf/valspace.hpp"

namespace acvf {

namespace {

void check_family(const std::vector<FieldVector>& vs) {
  require(!vs.empty(), ErrorCode::kEmptyInput, "empty family");
  const std::size_t n = vs[0].size();
  require(n > 0, ErrorCode::kEmptyInput, "zero-length vectors");
  for (const auto& v : vs) {
    require(v.size() == n, ErrorCode::kDimensionMismatch, "vectors differ in length");
    for (const auto& x : v) require_same_backend(x, vs[0][0]);
  }
}

}  // namespace

GammaVal vv_val(const FieldVector& v) { return min_val(v); }

QVector residue_at(const FieldVector& v, const Rational& e) {
  QVector out(v.size());
  for (std::size_t i = 0; i < v.size(); ++i) {
    const GammaVal vi = fe_val(v[i]);
    if (vi == GammaVal(e)) out[i] = leading_term(v[i]).first;
  }
  return out;
}

SeparatedFamily separate(const std::vector<FieldVector>& vectors) {
  check_family(vectors);
  const Backend b = vectors[0][0].backend();
  const std::size_t m = vectors.size();

  SeparatedFamily out;
  std::vector<FieldVector> kept;
  std::vector<std::size_t> kept_index;
  for (std::size_t i = 0; i < m; ++i) {
    bool dependent = true;
    for (const auto& x : vectors[i]) dependent = dependent && x.is_zero();
    if (!dependent && !kept.empty()) {
      std::vector<FieldVector> trial = kept;
      trial.push_back(vectors[i]);
      dependent = rank(from_columns(trial)) == kept.size();
    }
    if (dependent) {
      out.dropped.push_back(i);
    } else {
      kept.push_back(vectors[i]);
      kept_index.push_back(i);
    }
  }

  std::vector<FieldVector> coeffs;  // coefficients over the inputs
  std::vector<GammaVal> vals;
  for (std::size_t k = 0; k < kept.size(); ++k) {
    FieldVector a = kept[k];
    FieldVector ca(m, FieldElem::zero(b));
    ca[kept_index[k]] = FieldElem::one(b);
    for (;;) {
      const Rational va = vv_val(a).value();
      std::vector<std::size_t> cls;
      for (std::size_t j = 0; j < out.vectors.size(); ++j) {
        if (in_value_group(b, va - vals[j].value())) cls.push_back(j);
      }
      std::optional<QVector> lambda;
      if (!cls.empty()) {
        QMatrix res(a.size(), cls.size());
        for (std::size_t c = 0; c < cls.size(); ++c) {
          const QVector r = residue_at(out.vectors[cls[c]], vals[cls[c]].value());
          for (std::size_t i = 0; i < r.size(); ++i) res(i, c) = r[i];
        }
        lambda = q_solve_in_span(res, residue_at(a, va));
      }
      if (!lambda) break;
      for (std::size_t c = 0; c < cls.size(); ++c) {
        const Rational& l = (*lambda)[c];
        if (l == 0) continue;
        const std::size_t j = cls[c];
        const FieldElem f = FieldElem::monomial(b, l, va - vals[j].value());
        for (std::size_t i = 0; i < a.size(); ++i) a[i] -= f * out.vectors[j][i];
        for (std::size_t i = 0; i < m; ++i) ca[i] -= f * coeffs[j][i];
      }
    }
    vals.push_back(vv_val(a));
    out.vectors.push_back(std::move(a));
    coeffs.push_back(std::move(ca));
  }

  out.transform = zeros(b, out.vectors.size(), m);
  for (std::size_t j = 0; j < coeffs.size(); ++j) {
    for (std::size_t i = 0; i < m; ++i) out.transform(j, i) = coeffs[j][i];
  }
  return out;
}

GammaVal tensor_val(const std::vector<std::pair<FieldVector, FieldVector>>& pairs) {
  require(!pairs.empty(), ErrorCode::kEmptyInput, "empty tensor");
  std::vector<FieldVector> left;
  for (const auto& p : pairs) left.push_back(p.first);
  const std::size_t nb = pairs[0].second.size();
  for (const auto& p : pairs) {
    require(p.second.size() == nb && nb > 0, ErrorCode::kDimensionMismatch,
            "right factors differ in length");
  }
  bool all_zero = true;
  for (const auto& a : left) {
    for (const auto& x : a) all_zero = all_zero && x.is_zero();
  }
  if (all_zero) return GammaVal::infinity();

  const SeparatedFamily sep = separate(left);
  const Backend b = left[0][0].backend();
  const FieldMatrix s = from_columns(sep.vectors);
  // x = Σ_j s_j ⊗ b'_j with b'_j = Σ_i μ_ij b_i where a_i = Σ_j μ_ij s_j.
  std::vector<FieldVector> bp(sep.vectors.size(), FieldVector(nb, FieldElem::zero(b)));
  for (std::size_t i = 0; i < pairs.size(); ++i) {
    const auto mu = solve_in_span(s, left[i]);
    require(mu.has_value(), ErrorCode::kMalformed, "separated family lost a vector");
    for (std::size_t j = 0; j < bp.size(); ++j) {
      if ((*mu)[j].is_zero()) continue;
      for (std::size_t k = 0; k < nb; ++k) bp[j][k] += (*mu)[j] * pairs[i].second[k];
    }
  }
  GammaVal best = GammaVal::infinity();
  for (std::size_t j = 0; j < bp.size(); ++j) {
    best = min(best, vv_val(sep.vectors[j]) + vv_val(bp[j]));
  }
  return best;
}

}  // namespace acvf
