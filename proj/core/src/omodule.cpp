#include "acvf/omodule.hpp"

#include <algorithm>
#include <numeric>

namespace acvf {

namespace {

int tag_rank(Tag t) { return static_cast<int>(t); }

// Coordinates of x in the basis of m.
FieldVector coords(const ModuleDesc& m, const FieldVector& x) {
  require(x.size() == m.n, ErrorCode::kDimensionMismatch, "vector length");
  return solve(m.basis, x);
}

// Whether s·y ∈ S for every s in the component `from`, where S is `to`.
bool scaled_line_inside(const Component& from, const FieldElem& y, const Component& to) {
  if (y.is_zero() || from.tag == Tag::kZero) return true;
  if (to.tag == Tag::kFree) return true;
  if (to.tag == Tag::kZero) return false;
  const GammaVal v = fe_val(y);
  switch (from.tag) {
    case Tag::kZero:
      return true;
    case Tag::kFree:
      return false;
    case Tag::kOShift:
      return to.tag == Tag::kOShift ? v + from.gamma >= GammaVal(to.gamma)
                                    : v + from.gamma > GammaVal(to.gamma);
    case Tag::kMShift:
      return v + from.gamma >= GammaVal(to.gamma);
  }
  return false;
}

}  // namespace

std::string_view tag_name(Tag t) {
  switch (t) {
    case Tag::kFree: return "FREE";
    case Tag::kOShift: return "O_SHIFT";
    case Tag::kMShift: return "M_SHIFT";
    case Tag::kZero: return "ZERO";
  }
  return "?";
}

ModuleDesc mod_canonical(const ModuleDesc& m) {
  std::vector<std::size_t> order(m.n);
  std::iota(order.begin(), order.end(), 0);
  std::stable_sort(order.begin(), order.end(), [&](std::size_t a, std::size_t b) {
    return tag_rank(m.signature[a].tag) < tag_rank(m.signature[b].tag);
  });
  ModuleDesc out;
  out.n = m.n;
  out.basis = m.basis;
  for (std::size_t k = 0; k < m.n; ++k) {
    out.basis.set_col(k, m.basis.col(order[k]));
    Component c = m.signature[order[k]];
    if (c.tag == Tag::kFree || c.tag == Tag::kZero) c.gamma = 0;
    out.signature.push_back(c);
  }
  return out;
}

ModuleDesc mod_make(FieldMatrix basis, std::vector<Component> signature) {
  require(basis.is_square() && basis.rows() == signature.size() && !signature.empty(),
          ErrorCode::kDimensionMismatch, "basis and signature sizes differ");
  require(is_invertible(basis), ErrorCode::kSingularMatrix, "module basis is singular");
  const Backend b = backend_of(basis);
  for (const auto& c : signature) {
    if (c.tag == Tag::kOShift || c.tag == Tag::kMShift) require_value_group(b, c.gamma);
  }
  ModuleDesc m;
  m.n = signature.size();
  m.basis = std::move(basis);
  m.signature = std::move(signature);
  return mod_canonical(m);
}

ModuleDesc mod_standard(Backend b, std::size_t n) {
  return mod_make(identity(b, n), std::vector<Component>(n, Component{Tag::kOShift, 0}));
}

Classification mod_classify(const ModuleDesc& m) {
  Classification c;
  for (const auto& s : m.signature) {
    if (s.tag == Tag::kFree) ++c.free;
    if (s.tag == Tag::kOShift) ++c.o;
    if (s.tag == Tag::kMShift) ++c.m;
  }
  return c;
}

ModuleDesc mod_dual(const ModuleDesc& m, DualMode mode) {
  ModuleDesc d;
  d.n = m.n;
  d.basis = inverse(m.basis.transpose());
  for (const auto& c : m.signature) {
    switch (c.tag) {
      case Tag::kFree: d.signature.push_back({Tag::kZero, 0}); break;
      case Tag::kZero: d.signature.push_back({Tag::kFree, 0}); break;
      case Tag::kOShift:
        d.signature.push_back({mode == DualMode::kO ? Tag::kOShift : Tag::kMShift, -c.gamma});
        break;
      case Tag::kMShift: d.signature.push_back({Tag::kOShift, -c.gamma}); break;
    }
  }
  return mod_canonical(d);
}

ModuleDesc mod_closure(const ModuleDesc& m) {
  return mod_dual(mod_dual(m, DualMode::kO), DualMode::kO);
}

ModulePredicates mod_predicates(const ModuleDesc& m) {
  const Classification c = mod_classify(m);
  ModulePredicates p;
  p.g_closed = c.m == 0;
  p.semilattice = p.g_closed && c.free + c.o == m.n;
  p.lattice = c.o == m.n;
  return p;
}

GammaVal semilattice_val(const ModuleDesc& m, const FieldVector& a) {
  require(mod_predicates(m).semilattice, ErrorCode::kNotSemilattice, "not a semi-lattice");
  const FieldVector y = coords(m, a);
  GammaVal best = GammaVal::infinity();
  for (std::size_t i = 0; i < m.n; ++i) {
    if (m.signature[i].tag == Tag::kOShift) best = min(best, fe_val(y[i]) - m.signature[i].gamma);
  }
  return best;
}

bool mod_member(const ModuleDesc& m, const FieldVector& x) {
  const FieldVector y = coords(m, x);
  const Component unit{Tag::kOShift, 0};
  for (std::size_t i = 0; i < m.n; ++i) {
    // y_i ∈ S_i  iff  O·y_i ⊆ S_i.
    if (!scaled_line_inside(unit, y[i], m.signature[i])) return false;
  }
  return true;
}

bool mod_leq(const ModuleDesc& m1, const ModuleDesc& m2) {
  require(m1.n == m2.n, ErrorCode::kDimensionMismatch, "module dimensions differ");
  const FieldMatrix y = inverse(m2.basis) * m1.basis;
  for (std::size_t j = 0; j < m1.n; ++j) {
    for (std::size_t i = 0; i < m2.n; ++i) {
      if (!scaled_line_inside(m1.signature[j], y(i, j), m2.signature[i])) return false;
    }
  }
  return true;
}

bool mod_equal(const ModuleDesc& m1, const ModuleDesc& m2) {
  return mod_leq(m1, m2) && mod_leq(m2, m1);
}

}  // namespace acvf
