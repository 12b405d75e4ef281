#include <gtest/gtest.h>

#include "support/generators.hpp"

using namespace acvf;
using namespace acvf::testing;

namespace {

const Backend R = Backend::kRatFunc;
const Backend P = Backend::kPuiseux;

ModuleDesc one_dim(Tag tag, Rational g = 0, Backend b = R) {
  return mod_make(identity(b, 1), {{tag, g}});
}

}  // namespace

TEST(ModClassify, Examples) {
  EXPECT_EQ(mod_classify(mod_make(identity(R, 2), {{Tag::kOShift, 0}, {Tag::kFree, 0}})),
            (Classification{1, 1, 0}));
  EXPECT_EQ(mod_classify(mod_standard(R, 4)), (Classification{0, 4, 0}));
  EXPECT_EQ(mod_classify(one_dim(Tag::kMShift)), (Classification{0, 0, 1}));
}

TEST(ModDual, Examples) {
  EXPECT_EQ(mod_dual(one_dim(Tag::kOShift), DualMode::kM).signature,
            (std::vector<Component>{{Tag::kMShift, 0}}));
  EXPECT_EQ(mod_dual(one_dim(Tag::kMShift), DualMode::kM).signature,
            (std::vector<Component>{{Tag::kOShift, 0}}));
  EXPECT_EQ(mod_dual(one_dim(Tag::kFree), DualMode::kM).signature,
            (std::vector<Component>{{Tag::kZero, 0}}));
}

TEST(ModDual, MDualOfMByPairingSamples) {
  // {v : M·v ⊆ M} = O: with P's dense value group, v = t^{-1/k} fails against
  // a = t^{1/(2k)} while every integral v passes.
  const auto d = mod_dual(one_dim(Tag::kMShift, 0, P), DualMode::kM);
  for (long k = 1; k <= 6; ++k) {
    const auto v = FieldElem::monomial(P, 1, Rational(-1, k));
    const auto a = FieldElem::monomial(P, 1, Rational(1, 2 * k));
    EXPECT_FALSE(fe_val(a * v) > GammaVal(0));
    EXPECT_FALSE(mod_member(d, {v}));
    const auto w = FieldElem::monomial(P, 3, Rational(k - 1, k));
    EXPECT_TRUE(fe_val(a * w) > GammaVal(0));
    EXPECT_TRUE(mod_member(d, {w}));
  }
}

TEST(ModClosure, Examples) {
  EXPECT_EQ(mod_closure(one_dim(Tag::kMShift)).signature,
            (std::vector<Component>{{Tag::kOShift, 0}}));
  EXPECT_TRUE(mod_equal(mod_closure(mod_standard(R, 3)), mod_standard(R, 3)));
  const auto km = mod_make(identity(R, 2), {{Tag::kFree, 0}, {Tag::kMShift, 0}});
  EXPECT_EQ(mod_closure(km).signature,
            (std::vector<Component>{{Tag::kFree, 0}, {Tag::kOShift, 0}}));
}

TEST(ModPredicates, Examples) {
  auto p = mod_predicates(mod_standard(R, 3));
  EXPECT_TRUE(p.g_closed && p.semilattice && p.lattice);
  p = mod_predicates(mod_make(identity(R, 2), {{Tag::kFree, 0}, {Tag::kOShift, 0}}));
  EXPECT_TRUE(p.g_closed && p.semilattice);
  EXPECT_FALSE(p.lattice);
  p = mod_predicates(mod_make(identity(R, 2), {{Tag::kOShift, 0}, {Tag::kMShift, 0}}));
  EXPECT_FALSE(p.g_closed || p.semilattice || p.lattice);
}

TEST(SemilatticeVal, Examples) {
  EXPECT_EQ(semilattice_val(mod_standard(R, 2), {qc(1), qc(0)}), GammaVal(0));
  const auto m = mod_make(identity(R, 2), {{Tag::kOShift, 1}, {Tag::kOShift, 0}});
  EXPECT_EQ(semilattice_val(m, {qc(1), qc(1)}), GammaVal(-1));
  const auto ko = mod_make(identity(R, 2), {{Tag::kFree, 0}, {Tag::kOShift, 0}});
  EXPECT_TRUE(semilattice_val(ko, {qc(5), qc(0)}).is_infinite());
  try {
    semilattice_val(one_dim(Tag::kMShift), {qc(1)});
    FAIL();
  } catch (const Error& e) {
    EXPECT_EQ(e.code(), ErrorCode::kNotSemilattice);
  }
}

TEST(ModDual, InvolutionOnRandomModules) {
  Rng rng(31);
  for (int it = 0; it < 100; ++it) {
    const auto n = static_cast<std::size_t>(rng.uniform(1, 4));
    const auto m = random_module(rng, R, n);
    EXPECT_EQ(mod_dual(mod_dual(m, DualMode::kM), DualMode::kM), m);
    const auto c = random_closed_module(rng, R, n);
    EXPECT_EQ(mod_dual(mod_dual(c, DualMode::kO), DualMode::kO), c);
  }
}

TEST(ModDual, InclusionReversing) {
  Rng rng(32);
  for (int it = 0; it < 60; ++it) {
    const auto n = static_cast<std::size_t>(rng.uniform(1, 3));
    const auto m = random_module(rng, R, n);
    // Shrink m by pushing one component deeper.
    ModuleDesc s = m;
    for (auto& c : s.signature) {
      if (c.tag == Tag::kOShift || c.tag == Tag::kMShift) c.gamma += 1;
      if (c.tag == Tag::kFree) c.tag = Tag::kOShift;
    }
    s = mod_canonical(s);
    ASSERT_TRUE(mod_leq(s, m));
    for (auto mode : {DualMode::kO, DualMode::kM}) {
      EXPECT_TRUE(mod_leq(mod_dual(m, mode), mod_dual(s, mode)));
    }
  }
}

TEST(ModClosure, IdempotentContainsAndLeast) {
  Rng rng(33);
  for (int it = 0; it < 60; ++it) {
    const auto n = static_cast<std::size_t>(rng.uniform(1, 4));
    const auto m = random_module(rng, R, n);
    const auto c = mod_closure(m);
    EXPECT_TRUE(mod_predicates(c).g_closed);
    EXPECT_EQ(mod_closure(c), c);
    EXPECT_TRUE(mod_leq(m, c));
    for (int k = 0; k < 10; ++k) {
      FieldVector x(n);
      for (auto& xi : x) xi = rng.laurent(-3, 3, 2);
      if (mod_member(m, x)) EXPECT_TRUE(mod_member(c, x));
    }
    // Closed supersets: perturb c by lowering shifts; each contains m and c.
    for (int k = 0; k < 5; ++k) {
      ModuleDesc sup = c;
      for (auto& comp : sup.signature) {
        if (comp.tag == Tag::kOShift) comp.gamma -= rng.uniform(0, 1);
      }
      if (mod_leq(m, sup)) EXPECT_TRUE(mod_leq(c, sup));
    }
    // Pushing any O component of the closure deeper loses part of m.
    for (std::size_t i = 0; i < n; ++i) {
      if (c.signature[i].tag != Tag::kOShift) continue;
      ModuleDesc smaller = c;
      smaller.signature[i].gamma += 1;
      EXPECT_FALSE(mod_leq(m, smaller));
    }
  }
}

TEST(SemilatticeVal, Ultrametric) {
  Rng rng(34);
  for (int it = 0; it < 60; ++it) {
    const auto n = static_cast<std::size_t>(rng.uniform(1, 4));
    ModuleDesc m = random_closed_module(rng, R, n);
    for (auto& c : m.signature) {
      if (c.tag == Tag::kZero) c.tag = Tag::kFree;
    }
    m = mod_canonical(m);
    for (int k = 0; k < 10; ++k) {
      FieldVector a(n), b(n);
      for (auto& x : a) x = rng.laurent(-2, 2, 2);
      for (auto& x : b) x = rng.laurent(-2, 2, 2);
      const FieldElem c = rng.ratfunc(-2, 2);
      FieldVector s(n), ca(n);
      for (std::size_t i = 0; i < n; ++i) {
        s[i] = a[i] + b[i];
        ca[i] = c * a[i];
      }
      EXPECT_GE(semilattice_val(m, s), min(semilattice_val(m, a), semilattice_val(m, b)));
      EXPECT_EQ(semilattice_val(m, ca), fe_val(c) + semilattice_val(m, a));
    }
  }
}

TEST(SemilatticeVal, AgreesWithLatticeMembership) {
  Rng rng(35);
  for (int it = 0; it < 40; ++it) {
    const auto n = static_cast<std::size_t>(rng.uniform(1, 3));
    ModuleDesc m = random_closed_module(rng, R, n);
    for (auto& c : m.signature) c.tag = Tag::kOShift;
    const auto l = lattice_of(m);
    for (int k = 0; k < 10; ++k) {
      FieldVector a(n);
      for (auto& x : a) x = rng.laurent(-3, 3, 2);
      const GammaVal v = semilattice_val(m, a);
      if (v.is_infinite()) continue;
      // v is the largest γ with t^{-γ}a ∈ Λ.
      FieldVector at(n), above(n);
      for (std::size_t i = 0; i < n; ++i) {
        at[i] = a[i].shifted(-v.value());
        above[i] = a[i].shifted(-v.value() - 1);
      }
      EXPECT_TRUE(lat_member(l, at));
      EXPECT_FALSE(lat_member(l, above));
    }
  }
}
