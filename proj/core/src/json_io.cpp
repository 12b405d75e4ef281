#include "acvf/json_io.hpp"

#include <algorithm>
#include <sstream>

namespace acvf {

namespace {

[[noreturn]] void malformed(const std::string& what) { raise(ErrorCode::kMalformed, what); }

const Json& array(const Json& j, const char* what) {
  if (!j.is_array()) malformed(std::string(what) + " must be an array");
  return j;
}

const std::string& text(const Json& j, const char* what) {
  if (!j.is_string()) malformed(std::string(what) + " must be a string");
  return j.get_ref<const std::string&>();
}

std::size_t count(const Json& j, const char* what) {
  if (!j.is_number_unsigned() && !(j.is_number_integer() && j.get<long long>() >= 0)) {
    malformed(std::string(what) + " must be a nonnegative integer");
  }
  return j.get<std::size_t>();
}

long integer(const Json& j, const char* what) {
  if (!j.is_number_integer()) malformed(std::string(what) + " must be an integer");
  return j.get<long>();
}

bool boolean(const Json& j, const char* what) {
  if (!j.is_boolean()) malformed(std::string(what) + " must be a boolean");
  return j.get<bool>();
}

Json qpoly_terms(const QPoly& p) {
  Json out = Json::array();
  for (std::size_t k = 0; k < p.coeffs().size(); ++k) {
    if (p.coeffs()[k] != 0) out.push_back(Json::array({to_string(p.coeffs()[k]), k}));
  }
  return out;
}

FieldElem laurent_from_terms(const Json& j) {
  std::vector<std::pair<Rational, long>> terms;
  for (const auto& t : array(j, "term list")) {
    if (!t.is_array() || t.size() != 2) malformed("term must be [coefficient, exponent]");
    terms.emplace_back(rational_from_json(t[0]), integer(t[1], "exponent"));
  }
  return FieldElem::laurent(terms);
}

std::string exponent_key(const Exponent& e) {
  std::string s;
  for (std::size_t i = 0; i < e.size(); ++i) {
    if (i) s += ',';
    s += std::to_string(e[i]);
  }
  return s;
}

Exponent parse_exponent_key(const std::string& key, std::size_t n) {
  Exponent e;
  std::stringstream ss(key);
  std::string part;
  while (std::getline(ss, part, ',')) {
    if (part.empty() || !std::all_of(part.begin(), part.end(), [](char c) { return c >= '0' && c <= '9'; })) {
      malformed("bad monomial key '" + key + "'");
    }
    e.push_back(static_cast<unsigned>(std::stoul(part)));
  }
  if (e.size() != n) malformed("monomial key '" + key + "' has the wrong number of variables");
  return e;
}

Tag parse_tag(const std::string& s) {
  for (Tag t : {Tag::kFree, Tag::kOShift, Tag::kMShift, Tag::kZero}) {
    if (tag_name(t) == s) return t;
  }
  malformed("unknown tag '" + s + "'");
}

Json threshold_alpha(const Threshold& th) {
  switch (th.kind) {
    case Threshold::Kind::kPosInf: return "+inf";
    case Threshold::Kind::kNegInf: return "-inf";
    case Threshold::Kind::kFinite: break;
  }
  return to_string(th.alpha);
}

}  // namespace

std::string_view library_version() { return ACVF_VERSION; }

const Json& field(const Json& j, const char* key) {
  if (!j.is_object()) malformed(std::string("expected an object with key '") + key + "'");
  auto it = j.find(key);
  if (it == j.end()) malformed(std::string("missing key '") + key + "'");
  return *it;
}

std::string dump(const Json& j) { return j.dump(); }

// ------------------------------------------------------------------ encoders

Json to_json(const Rational& q) { return to_string(q); }
Json to_json(const GammaVal& g) { return to_string(g); }

Json to_json(const FieldElem& x) {
  if (x.backend() == Backend::kRatFunc) {
    const RatFunc& r = x.as_ratfunc();
    return {{"num", qpoly_terms(r.num)}, {"den", qpoly_terms(r.den)}};
  }
  const Puiseux& p = x.as_puiseux();
  Json terms = Json::array();
  for (const auto& t : p.terms) terms.push_back(Json::array({to_string(t.coeff), to_string(t.exp)}));
  return {{"terms", terms}, {"prec", to_string(p.prec)}};
}

Json to_json(const FieldVector& v) {
  Json out = Json::array();
  for (const auto& x : v) out.push_back(to_json(x));
  return out;
}

Json to_json(const FieldMatrix& m) {
  Json out = Json::array();
  for (std::size_t i = 0; i < m.rows(); ++i) out.push_back(to_json(m.row(i)));
  return out;
}

Json to_json(const QVector& v) {
  Json out = Json::array();
  for (const auto& x : v) out.push_back(to_string(x));
  return out;
}

Json to_json(const QMatrix& m) {
  Json out = Json::array();
  for (std::size_t i = 0; i < m.rows(); ++i) out.push_back(to_json(m.row(i)));
  return out;
}

Json to_json(const SeparatedFamily& s) {
  Json vecs = Json::array();
  for (const auto& v : s.vectors) vecs.push_back(to_json(v));
  return {{"vectors", vecs}, {"transform", to_json(s.transform)}, {"dropped", s.dropped}};
}

Json to_json(const LatticeCode& l) {
  return {{"n", l.n}, {"U", to_json(l.U)}, {"gamma", to_json(l.gamma)}, {"canonical", l.canonical}};
}

Json to_json(const TnCode& c) {
  Json j = to_json(c.lattice);
  j["residue_vector"] = to_json(c.residue_vector);
  return j;
}

Json to_json(const ModuleDesc& m) {
  Json sig = Json::array();
  for (const auto& c : m.signature) sig.push_back({{"tag", tag_name(c.tag)}, {"gamma", to_string(c.gamma)}});
  return {{"n", m.n}, {"basis", to_json(m.basis)}, {"signature", sig}};
}

Json to_json(const GammaType& p) {
  return {{"n", p.point.n}, {"inf", p.point.inf}, {"eps", p.point.eps}, {"coeffs", to_json(p.point.coeffs)}};
}

Json to_json(const Poly& f) {
  Json terms = Json::object();
  for (const auto& [e, c] : f.terms) terms[exponent_key(e)] = to_json(c);
  return {{"nvars", f.nvars}, {"terms", terms}};
}

Json to_json(const PolySpace& h) { return {{"num_vars", h.nvars}, {"degree", h.degree}}; }

Json to_json(const MonomialType& p) { return {{"center", to_json(p.center)}, {"radii", to_json(p.radii)}}; }

Json to_json(const AffineLatticeFamily& f) {
  return {{"poly_space", to_json(f.space)}, {"center", to_json(f.center)}, {"L", to_json(f.L)}, {"c", to_json(f.c)}};
}

Json to_json(const IntegralType& q) { return {{"r", to_json(q.r)}, {"family", to_json(q.family)}}; }

Json to_json(const CongruenceSubgroup& h) {
  Json th = Json::array();
  for (std::size_t i = 0; i < h.n(); ++i) {
    for (std::size_t j = i + 1; j < h.n(); ++j) {
      const Threshold& t = h.at(i, j);
      th.push_back({{"i", i}, {"j", j}, {"alpha", threshold_alpha(t)}, {"strict", t.strict}});
    }
  }
  return {{"n", h.n()}, {"thresholds", th}};
}

Json to_json(const GermPair& p) { return {{"r", to_json(p.r)}, {"b", to_json(p.b)}}; }

Json to_json(const MembershipVerdict& v) {
  Json wit = Json::array();
  for (const auto& w : v.witnesses) wit.push_back(to_json(w));
  Json diag = nullptr;
  if (v.diagonal) {
    Json weights = Json::array();
    for (const auto& w : v.diagonal->weights) weights.push_back(w ? to_json(*w) : Json(nullptr));
    diag = {{"center", to_json(v.diagonal->center)}, {"weights", weights}};
  }
  return {{"verdict", verdict_name(v.verdict)},
          {"method", v.method},
          {"witnesses", wit},
          {"residues", to_json(v.residues)},
          {"diagonal", diag},
          {"empty_image", v.empty_image},
          {"forced_zero", v.forced_zero},
          {"reason", v.reason}};
}

// ------------------------------------------------------------------ decoders

Rational rational_from_json(const Json& j) {
  if (j.is_number_integer()) return Rational(j.get<long>());
  return parse_rational(text(j, "rational"));
}

GammaVal gamma_val_from_json(const Json& j) {
  if (j.is_number_integer()) return GammaVal(Rational(j.get<long>()));
  return parse_gamma_val(text(j, "value"));
}

QVector qvector_from_json(const Json& j) {
  QVector v;
  for (const auto& x : array(j, "rational vector")) v.push_back(rational_from_json(x));
  return v;
}

QMatrix qmatrix_from_json(const Json& j) {
  const auto& rows = array(j, "rational matrix");
  const std::size_t cols = rows.empty() ? 0 : array(rows[0], "matrix row").size();
  QMatrix m(rows.size(), cols);
  for (std::size_t i = 0; i < rows.size(); ++i) {
    const QVector r = qvector_from_json(rows[i]);
    if (r.size() != cols) malformed("ragged matrix");
    for (std::size_t k = 0; k < cols; ++k) m(i, k) = r[k];
  }
  return m;
}

Backend parse_backend(std::string_view name) {
  if (name == "ratfunc" || name == "RATFUNC") return Backend::kRatFunc;
  if (name == "puiseux" || name == "PUISEUX") return Backend::kPuiseux;
  malformed("unknown backend '" + std::string(name) + "'");
}

void Decoder::pin(Backend b) {
  if (!backend_) backend_ = b;
  if (*backend_ != b) raise(ErrorCode::kBackendMismatch, "elements from different backends");
}

FieldElem Decoder::elem(const Json& j) {
  if (j.is_string() || j.is_number_integer()) {
    const Backend b = backend_.value_or(Backend::kRatFunc);
    pin(b);
    return FieldElem::from_rational(b, rational_from_json(j));
  }
  if (!j.is_object()) malformed("field element must be an object or a rational string");
  if (j.contains("num")) {
    pin(Backend::kRatFunc);
    const FieldElem num = laurent_from_terms(field(j, "num"));
    const FieldElem den = laurent_from_terms(field(j, "den"));
    if (den.is_zero()) malformed("zero denominator");
    return num / den;
  }
  if (j.contains("terms")) {
    pin(Backend::kPuiseux);
    std::vector<PuiseuxTerm> terms;
    for (const auto& t : array(field(j, "terms"), "term list")) {
      if (!t.is_array() || t.size() != 2) malformed("term must be [coefficient, exponent]");
      terms.push_back({rational_from_json(t[0]), rational_from_json(t[1])});
    }
    const GammaVal prec = j.contains("prec") ? gamma_val_from_json(j["prec"]) : GammaVal::infinity();
    for (const auto& t : terms) {
      if (!prec.is_infinite() && t.exp >= prec.value()) malformed("term at or above the precision bound");
    }
    return FieldElem::puiseux(std::move(terms), prec);
  }
  malformed("field element needs 'num'/'den' or 'terms'");
}

FieldVector Decoder::vector(const Json& j) {
  FieldVector v;
  for (const auto& x : array(j, "vector")) v.push_back(elem(x));
  return v;
}

FieldMatrix Decoder::matrix(const Json& j) {
  const auto& rows = array(j, "matrix");
  if (rows.empty()) malformed("empty matrix");
  std::vector<FieldVector> rs;
  for (const auto& r : rows) rs.push_back(vector(r));
  const std::size_t cols = rs[0].size();
  FieldMatrix m(rs.size(), cols);
  for (std::size_t i = 0; i < rs.size(); ++i) {
    if (rs[i].size() != cols) malformed("ragged matrix");
    for (std::size_t k = 0; k < cols; ++k) m(i, k) = rs[i][k];
  }
  return m;
}

std::vector<FieldVector> Decoder::vectors(const Json& j) {
  std::vector<FieldVector> out;
  for (const auto& v : array(j, "vector list")) out.push_back(vector(v));
  return out;
}

SeparatedFamily Decoder::separated(const Json& j) {
  SeparatedFamily s;
  s.vectors = vectors(field(j, "vectors"));
  const auto& t = field(j, "transform");
  if (!array(t, "transform").empty()) s.transform = matrix(t);
  for (const auto& d : array(field(j, "dropped"), "dropped")) s.dropped.push_back(count(d, "index"));
  return s;
}

LatticeCode Decoder::lattice(const Json& j) {
  LatticeCode l;
  l.n = count(field(j, "n"), "n");
  l.U = matrix(field(j, "U"));
  l.gamma = qvector_from_json(field(j, "gamma"));
  l.canonical = j.contains("canonical") && boolean(j["canonical"], "canonical");
  require(l.U.rows() == l.n && l.U.cols() == l.n && l.gamma.size() == l.n,
          ErrorCode::kDimensionMismatch, "lattice code shape");
  return l;
}

TnCode Decoder::tn(const Json& j) {
  return {lattice(j), qvector_from_json(field(j, "residue_vector"))};
}

ModuleDesc Decoder::module(const Json& j) {
  FieldMatrix basis = matrix(field(j, "basis"));
  std::vector<Component> sig;
  for (const auto& c : array(field(j, "signature"), "signature")) {
    const Json gamma = c.contains("gamma") ? c["gamma"] : Json("0");
    sig.push_back({parse_tag(text(field(c, "tag"), "tag")), rational_from_json(gamma)});
  }
  if (j.contains("n")) {
    require(count(j["n"], "n") == sig.size(), ErrorCode::kDimensionMismatch, "module size");
  }
  return mod_make(std::move(basis), std::move(sig));
}

GammaType Decoder::gamma_type(const Json& j) {
  GammaType p = gt_make(count(field(j, "inf"), "inf"), count(field(j, "eps"), "eps"),
                        qmatrix_from_json(field(j, "coeffs")));
  if (j.contains("n")) {
    require(count(j["n"], "n") == p.point.n, ErrorCode::kDimensionMismatch, "type arity");
  }
  return p;
}

Poly Decoder::poly(const Json& j) {
  Poly f;
  f.nvars = count(field(j, "nvars"), "nvars");
  const auto& terms = field(j, "terms");
  if (!terms.is_object()) malformed("terms must be an object");
  for (const auto& [key, c] : terms.items()) {
    const Exponent e = parse_exponent_key(key, f.nvars);
    if (f.terms.count(e)) malformed("repeated monomial '" + key + "'");
    f = poly_add_term(std::move(f), e, elem(c));
  }
  return f;
}

PolySpace Decoder::space(const Json& j) {
  PolySpace h;
  h.nvars = count(field(j, "num_vars"), "num_vars");
  h.degree = static_cast<unsigned>(count(field(j, "degree"), "degree"));
  require(h.nvars >= 1, ErrorCode::kMalformed, "num_vars must be positive");
  return h;
}

MonomialType Decoder::monomial_type(const Json& j) {
  return {vector(field(j, "center")), qvector_from_json(field(j, "radii"))};
}

AffineLatticeFamily Decoder::family(const Json& j) {
  AffineLatticeFamily f;
  f.space = space(field(j, "poly_space"));
  f.center = vector(field(j, "center"));
  f.L = qmatrix_from_json(field(j, "L"));
  f.c = qvector_from_json(field(j, "c"));
  return f;
}

IntegralType Decoder::integral(const Json& j) { return {gamma_type(field(j, "r")), family(field(j, "family"))}; }

CongruenceSubgroup Decoder::subgroup(const Json& j) {
  CongruenceSubgroup h(count(field(j, "n"), "n"));
  for (const auto& t : array(field(j, "thresholds"), "thresholds")) {
    const std::size_t i = count(field(t, "i"), "i"), k = count(field(t, "j"), "j");
    require(i < k && k < h.n(), ErrorCode::kDimensionMismatch, "threshold index outside i < j < n");
    const std::string& a = text(field(t, "alpha"), "alpha");
    const bool strict = t.contains("strict") && boolean(t["strict"], "strict");
    if (a == "+inf" || a == "inf") {
      h.set(i, k, Threshold::pos_inf());
    } else if (a == "-inf") {
      h.set(i, k, Threshold::neg_inf());
    } else {
      h.set(i, k, Threshold::finite(parse_rational(a), strict));
    }
  }
  return h;
}

GermPair Decoder::germ(const Json& j) { return {gamma_type(field(j, "r")), matrix(field(j, "b"))}; }

MembershipVerdict Decoder::verdict(const Json& j) {
  MembershipVerdict v;
  const std::string& name = text(field(j, "verdict"), "verdict");
  if (name == "YES") {
    v.verdict = Verdict::kYes;
  } else if (name == "NO") {
    v.verdict = Verdict::kNo;
  } else if (name == "UNDECIDED") {
    v.verdict = Verdict::kUndecided;
  } else {
    malformed("unknown verdict '" + name + "'");
  }
  v.method = text(field(j, "method"), "method");
  v.witnesses = vectors(field(j, "witnesses"));
  v.residues = qmatrix_from_json(field(j, "residues"));
  const auto& d = field(j, "diagonal");
  if (!d.is_null()) {
    DiagonalForm form{elem(field(d, "center")), {}};
    for (const auto& w : array(field(d, "weights"), "weights")) {
      form.weights.push_back(w.is_null() ? std::nullopt : std::optional<Rational>(rational_from_json(w)));
    }
    v.diagonal = std::move(form);
  }
  v.empty_image = boolean(field(j, "empty_image"), "empty_image");
  for (const auto& k : array(field(j, "forced_zero"), "forced_zero")) {
    v.forced_zero.push_back(static_cast<unsigned>(count(k, "index")));
  }
  v.reason = text(field(j, "reason"), "reason");
  return v;
}

}  // namespace acvf
