#include "commands.hpp"

namespace acvf::cli {

namespace {

// A command's main argument may be given bare instead of under its key.
const Json& primary(const Json& in, const char* key) {
  if (in.is_object() && in.contains(key)) return in[key];
  return in;
}

DualMode parse_mode(const Json& in) {
  if (!in.is_object() || !in.contains("mode")) return DualMode::kO;
  const Json& m = in["mode"];
  if (m == "O" || m == "O_DUAL") return DualMode::kO;
  if (m == "M" || m == "M_DUAL") return DualMode::kM;
  raise(ErrorCode::kMalformed, "mode must be \"O\" or \"M\"");
}

unsigned degree(const Json& in) {
  const Json& d = field(in, "d");
  if (!d.is_number_unsigned()) raise(ErrorCode::kMalformed, "d must be a positive integer");
  return d.get<unsigned>();
}

Json gval(const GammaVal& g) { return to_json(g); }

Json field_eval(const Json& in, const Context& ctx) {
  Decoder dec(ctx.backend);
  FieldElem x = dec.elem(field(in, "x"));
  if (in.contains("op")) {
    const FieldElem y = dec.elem(field(in, "y"));
    const Json& op = in["op"];
    if (op == "add") {
      x = x + y;
    } else if (op == "sub") {
      x = x - y;
    } else if (op == "mul") {
      x = x * y;
    } else if (op == "div") {
      x = x / y;
    } else {
      raise(ErrorCode::kMalformed, "op must be add, sub, mul or div");
    }
  }
  const GammaVal v = fe_val(x);
  Json residue = nullptr;
  if (!v.is_infinite() && v.value() == 0) residue = to_json(fe_residue(x));
  return {{"value", to_json(x)}, {"val", gval(v)}, {"residue", residue}, {"pretty", x.pretty()}};
}

Json field_section(const Json& in, const Context& ctx) {
  Decoder dec(ctx.backend);
  const FieldElem x = dec.elem(field(in, "x"));
  const Rational cutoff = rational_from_json(field(in, "cutoff"));
  const FieldElem s = in.contains("strict") ? fe_reduce_mod(x, cutoff, in["strict"].get<bool>())
                                            : fe_section(x, cutoff);
  return {{"section", to_json(s)}, {"pretty", s.pretty()}};
}

Json sep_basis(const Json& in, const Context& ctx) {
  Decoder dec(ctx.backend);
  return to_json(separate(dec.vectors(primary(in, "vectors"))));
}

LatticeCode lattice_arg(Decoder& dec, const Json& in, const char* key = "lattice") {
  return dec.lattice(primary(in, key));
}

const std::map<std::string, Handler> kCommands = {
    {"field eval", field_eval},
    {"field section", field_section},
    {"sep basis", sep_basis},
    {"lattice diag",
     [](const Json& in, const Context& ctx) {
       Decoder dec(ctx.backend);
       return to_json(diagonalize(dec.matrix(primary(in, "A"))));
     }},
    {"lattice canon",
     [](const Json& in, const Context& ctx) {
       Decoder dec(ctx.backend);
       return to_json(lat_canon(lattice_arg(dec, in)));
     }},
    {"lattice eq",
     [](const Json& in, const Context& ctx) {
       Decoder dec(ctx.backend);
       const bool eq = lat_equal(dec.lattice(field(in, "a")), dec.lattice(field(in, "b")));
       return Json{{"equal", eq}};
     }},
    {"lattice member",
     [](const Json& in, const Context& ctx) {
       Decoder dec(ctx.backend);
       const LatticeCode l = dec.lattice(field(in, "lattice"));
       return Json{{"member", lat_member(l, dec.vector(field(in, "x")))}};
     }},
    {"lattice dual",
     [](const Json& in, const Context& ctx) {
       Decoder dec(ctx.backend);
       return to_json(lat_dual(lattice_arg(dec, in), parse_mode(in)));
     }},
    {"lattice g",
     [](const Json& in, const Context& ctx) {
       Decoder dec(ctx.backend);
       return Json{{"g", to_json(g_invariant(lat_canon(lattice_arg(dec, in))))}};
     }},
    {"module classify",
     [](const Json& in, const Context& ctx) {
       Decoder dec(ctx.backend);
       const Classification c = mod_classify(dec.module(primary(in, "module")));
       return Json{{"free", c.free}, {"o", c.o}, {"m", c.m}};
     }},
    {"module dual",
     [](const Json& in, const Context& ctx) {
       Decoder dec(ctx.backend);
       return to_json(mod_dual(dec.module(primary(in, "module")), parse_mode(in)));
     }},
    {"module closure",
     [](const Json& in, const Context& ctx) {
       Decoder dec(ctx.backend);
       return to_json(mod_closure(dec.module(primary(in, "module"))));
     }},
    {"module pred",
     [](const Json& in, const Context& ctx) {
       Decoder dec(ctx.backend);
       const ModulePredicates p = mod_predicates(dec.module(primary(in, "module")));
       return Json{{"g_closed", p.g_closed}, {"semilattice", p.semilattice}, {"lattice", p.lattice}};
     }},
    {"module vval",
     [](const Json& in, const Context& ctx) {
       Decoder dec(ctx.backend);
       const ModuleDesc m = dec.module(field(in, "module"));
       return Json{{"val", gval(semilattice_val(m, dec.vector(field(in, "b"))))}};
     }},
    {"gamma push",
     [](const Json& in, const Context& ctx) {
       Decoder dec(ctx.backend);
       const GammaType p = dec.gamma_type(field(in, "type"));
       const QMatrix a = qmatrix_from_json(field(in, "A"));
       const QVector c = in.contains("c") ? qvector_from_json(in["c"]) : QVector(a.rows());
       return to_json(gt_push(p, a, c));
     }},
    {"gamma product",
     [](const Json& in, const Context& ctx) {
       Decoder dec(ctx.backend);
       return to_json(gt_product(dec.gamma_type(field(in, "p")), dec.gamma_type(field(in, "q"))));
     }},
    {"gamma limit",
     [](const Json& in, const Context& ctx) {
       Decoder dec(ctx.backend);
       const auto lim = gt_limit(dec.gamma_type(primary(in, "type")));
       return Json{{"limit", lim ? to_json(*lim) : Json(nullptr)}};
     }},
    {"gamma decompose",
     [](const Json& in, const Context& ctx) {
       Decoder dec(ctx.backend);
       const Decomposition d = gt_decompose(dec.gamma_type(primary(in, "type")));
       return Json{{"T", to_json(d.T)}, {"finite", d.finite}};
     }},
    {"gamma translate",
     [](const Json& in, const Context& ctx) {
       Decoder dec(ctx.backend);
       const auto [c, p0] = gt_translate0(dec.gamma_type(primary(in, "type")));
       return Json{{"c", to_json(c)}, {"p0", to_json(p0)}};
     }},
    {"gamma stab",
     [](const Json& in, const Context& ctx) {
       Decoder dec(ctx.backend);
       const GammaType r = dec.gamma_type(primary(in, "type"));
       Json out{{"basis", to_json(gt_stabilizer_basis(r))}};
       if (in.contains("c")) out["member"] = gt_stab_member(r, qvector_from_json(in["c"]));
       return out;
     }},
    {"gamma eq",
     [](const Json& in, const Context& ctx) {
       Decoder dec(ctx.backend);
       return Json{{"equal", gt_equal(dec.gamma_type(field(in, "p")), dec.gamma_type(field(in, "q")))}};
     }},
    {"stcomp val",
     [](const Json& in, const Context& ctx) {
       Decoder dec(ctx.backend);
       const MonomialType p = dec.monomial_type(field(in, "type"));
       const Poly f = dec.poly(field(in, "f"));
       return Json{{"val", gval(gauss_val(p, f))}, {"witness", to_json(gauss_witness(p, f))}};
     }},
    {"stcomp jd",
     [](const Json& in, const Context& ctx) {
       Decoder dec(ctx.backend);
       return to_json(jd(dec.monomial_type(field(in, "type")), degree(in)));
     }},
    {"stcomp trop",
     [](const Json& in, const Context& ctx) {
       Decoder dec(ctx.backend);
       if (in.contains("module")) {
         const ModuleDesc m = dec.module(in["module"]);
         return Json{{"val", gval(trop_h(m, dec.vector(field(in, "b"))))}};
       }
       const LatticeCode l = dec.lattice(field(in, "lattice"));
       return Json{{"val", gval(trop_h(l, dec.vector(field(in, "b"))))}};
     }},
    {"stcomp integrate",
     [](const Json& in, const Context& ctx) {
       Decoder dec(ctx.backend);
       const IntegralType q = dec.integral(field(in, "integral"));
       const auto v = integrate_val(q, dec.poly(field(in, "f")));
       return Json{{"val", v ? to_json(*v) : Json(nullptr)}};
     }},
    {"stcomp recover",
     [](const Json& in, const Context& ctx) {
       Decoder dec(ctx.backend);
       const Recovered r = recover(dec.integral(field(in, "integral")), degree(in));
       return Json{{"r", to_json(r.r)}, {"family", to_json(r.family)}};
     }},
    {"code group",
     [](const Json& in, const Context& ctx) {
       Decoder dec(ctx.backend);
       return Json{{"group", cs_group_check(dec.subgroup(primary(in, "subgroup")))}};
     }},
    {"code coset-eq",
     [](const Json& in, const Context& ctx) {
       Decoder dec(ctx.backend);
       const FieldMatrix a = dec.matrix(field(in, "a"));
       const FieldMatrix b = dec.matrix(field(in, "b"));
       return Json{{"equal", cs_coset_equal(a, b, dec.subgroup(field(in, "subgroup")))}};
     }},
    {"code coset-code",
     [](const Json& in, const Context& ctx) {
       Decoder dec(ctx.backend);
       const FieldMatrix a = dec.matrix(field(in, "a"));
       return Json{{"code", to_json(cs_coset_code(a, dec.subgroup(field(in, "subgroup"))))}};
     }},
    {"code dnu",
     [](const Json& in, const Context& ctx) {
       Decoder dec(ctx.backend);
       return to_json(dnu(dec.gamma_type(primary(in, "type"))));
     }},
    {"code germ-eq",
     [](const Json& in, const Context& ctx) {
       Decoder dec(ctx.backend);
       const GermPair p1 = dec.germ(field(in, "p1"));
       return Json{{"equivalent", germ_equiv(p1, dec.germ(field(in, "p2")))}};
     }},
    {"appendix member",
     [](const Json& in, const Context& ctx) {
       Decoder dec(ctx.backend);
       const ModuleDesc l = dec.module(primary(in, "module"));
       // One variable unless a space is given.
       const PolySpace h = in.contains("space") ? dec.space(in["space"])
                                                : PolySpace{1, static_cast<unsigned>(l.n - 1)};
       return to_json(appendix_member(l, h, ctx.budget, ctx.seed));
     }},
};

}  // namespace

const std::map<std::string, Handler>& commands() { return kCommands; }

}  // namespace acvf::cli
