#include <gtest/gtest.h>

#include "support/generators.hpp"

using namespace acvf;
using namespace acvf::testing;

namespace {

const Backend R = Backend::kRatFunc;

FieldMatrix m2(FieldElem a, FieldElem b, FieldElem c, FieldElem d) {
  FieldMatrix m(2, 2);
  m(0, 0) = a; m(0, 1) = b; m(1, 0) = c; m(1, 1) = d;
  return m;
}

LatticeCode code(FieldMatrix u, QVector g, bool canonical = false) {
  return LatticeCode{g.size(), std::move(u), std::move(g), canonical};
}

}  // namespace

TEST(Diagonalize, Examples) {
  auto l = diagonalize(m2(tp(1), qc(1), qc(1), qc(1)));
  EXPECT_EQ(l.U, identity(R, 2));
  EXPECT_EQ(l.gamma, (QVector{0, 0}));

  l = diagonalize(m2(tp(2), qc(0), qc(0), tp(-1)));
  EXPECT_EQ(l.U, identity(R, 2));
  EXPECT_EQ(l.gamma, (QVector{2, -1}));

  const auto u = m2(qc(1), tp(-1), qc(0), qc(1));
  l = diagonalize(u);
  EXPECT_EQ(l.U, u);
  EXPECT_EQ(l.gamma, (QVector{0, 0}));
}

TEST(Diagonalize, Singular) {
  try {
    diagonalize(m2(qc(1), tp(1), qc(2), tp(1) * qc(2)));
    FAIL();
  } catch (const Error& e) {
    EXPECT_EQ(e.code(), ErrorCode::kSingularMatrix);
  }
}

TEST(LatMember, Examples) {
  const auto o2 = diagonalize(identity(R, 2));
  EXPECT_TRUE(lat_member(o2, {qc(1), qc(1)}));
  EXPECT_FALSE(lat_member(o2, {tp(-1), qc(0)}));
  EXPECT_TRUE(lat_member(diagonalize(m2(tp(1), qc(1), qc(1), qc(1))), {qc(1), qc(0)}));
}

TEST(LatEqual, Examples) {
  const auto o2 = code(identity(R, 2), {0, 0});
  EXPECT_TRUE(lat_equal(o2, diagonalize(m2(qc(1), qc(1), qc(0), qc(1)))));
  EXPECT_FALSE(lat_equal(o2, code(identity(R, 2), {1, 0})));
  EXPECT_TRUE(lat_equal(code(m2(qc(1), tp(-1), qc(0), qc(1)), {0, 0}),
                        code(m2(qc(1), tp(-1) + qc(5), qc(0), qc(1)), {0, 0})));
}

TEST(GInvariant, Examples) {
  EXPECT_EQ(g_invariant(diagonalize(identity(R, 3))), (QVector{0, 0, 0}));
  EXPECT_EQ(g_invariant(diagonalize(m2(tp(2), qc(0), qc(0), tp(-1)))), (QVector{2, -1}));
  EXPECT_EQ(g_invariant(diagonalize(m2(tp(1), qc(1), qc(1), qc(1)))), (QVector{0, 0}));
}

TEST(LatDual, Examples) {
  const auto o1 = diagonalize(identity(R, 1));
  auto d = lat_dual(o1, DualMode::kO);
  EXPECT_EQ(d.signature, (std::vector<Component>{{Tag::kOShift, 0}}));
  // Discrete value group: t^0·M is re-expressed as tO.
  d = lat_dual(o1, DualMode::kM);
  EXPECT_EQ(d.signature, (std::vector<Component>{{Tag::kOShift, 1}}));
  const auto o1p = diagonalize(identity(Backend::kPuiseux, 1));
  d = lat_dual(o1p, DualMode::kM);
  EXPECT_EQ(d.signature, (std::vector<Component>{{Tag::kMShift, 0}}));

  FieldMatrix a(1, 1);
  a(0, 0) = tp(2);
  d = lat_dual(diagonalize(a), DualMode::kO);
  EXPECT_TRUE(lat_equal(lattice_of(d), code(identity(R, 1), {-2})));
}

TEST(LatDual, PairingIsIntegralAndTight) {
  Rng rng(8);
  for (int it = 0; it < 40; ++it) {
    const auto n = static_cast<std::size_t>(rng.uniform(1, 4));
    const auto l = diagonalize(random_invertible(rng, R, n));
    const auto d = lat_dual(l, DualMode::kO);
    const FieldMatrix pairing = lat_basis(l).transpose() * lat_basis(lattice_of(d));
    // Dual bases of O^n pair to a matrix in GL_n(O).
    for (std::size_t i = 0; i < n; ++i) {
      for (std::size_t j = 0; j < n; ++j) EXPECT_GE(fe_val(pairing(i, j)), GammaVal(0));
    }
    EXPECT_TRUE(lat_equal(lattice_of(mod_dual(d, DualMode::kO)), l));
  }
}

TEST(Diagonalize, MembershipMatchesInverseOracle) {
  Rng rng(21);
  for (int it = 0; it < 80; ++it) {
    const auto n = static_cast<std::size_t>(rng.uniform(1, 4));
    const auto a = random_invertible(rng, R, n);
    const auto l = diagonalize(a);
    const auto ainv = gj_inverse(a);
    for (int k = 0; k < 30; ++k) {
      FieldVector x = k % 2 == 0 ? a * integral_vector(rng, R, n) : FieldVector(n);
      if (k % 2 == 1) {
        for (auto& xi : x) xi = rng.laurent(-2, 2, 2);
      }
      if (k % 4 == 0) x[0] += tp(rng.uniform(-2, 1));
      ASSERT_EQ(lat_member(l, x), integral(ainv * x)) << "instance " << it;
    }
  }
}

TEST(Diagonalize, CanonicalUnderBorelO) {
  Rng rng(22);
  for (int it = 0; it < 30; ++it) {
    const auto n = static_cast<std::size_t>(rng.uniform(1, 4));
    const auto a = random_invertible(rng, R, n);
    const auto l = diagonalize(a);
    for (int k = 0; k < 10; ++k) {
      ASSERT_EQ(diagonalize(a * random_borel_o(rng, R, n)), l);
    }
    // G is a class function.
    EXPECT_EQ(g_invariant(lat_canon(code(l.U, l.gamma))), g_invariant(l));
  }
}

TEST(LatCanon, RejectsLowerEntries) {
  auto u = identity(R, 2);
  u(1, 0) = qc(3);
  EXPECT_THROW(lat_canon(code(u, {0, 0})), Error);
}

TEST(TnCode, ResidueOfPoint) {
  const auto l = diagonalize(m2(tp(1), qc(0), qc(0), qc(1)));
  const auto c = tn_code(l, {tp(1), qc(3)});
  EXPECT_EQ(c.residue_vector, (QVector{1, 3}));
  EXPECT_TRUE(tn_equal(c, tn_code(l, {tp(1) + tp(2), qc(3) + tp(1)})));
  EXPECT_FALSE(tn_equal(c, tn_code(l, {tp(1), qc(2)})));
  EXPECT_THROW(tn_code(l, {tp(2), tp(1)}), Error);
}

TEST(Diagonalize, PuiseuxMonomialMatrices) {
  Rng rng(23);
  const Backend P = Backend::kPuiseux;
  for (int it = 0; it < 30; ++it) {
    const auto n = static_cast<std::size_t>(rng.uniform(1, 3));
    const auto a = random_invertible(rng, P, n);
    const auto l = diagonalize(a);
    for (std::size_t j = 0; j < n; ++j) EXPECT_TRUE(lat_member(l, a.col(j)));
    // Oracle in ℚ(t^{1/2}), where the inverse is exact.
    const Integer d = 2;
    const auto lb = to_ratfunc_in_root(lat_basis(l), d);
    const auto ainv = gj_inverse(to_ratfunc_in_root(a, d));
    for (std::size_t j = 0; j < n; ++j) EXPECT_TRUE(integral(ainv * lb.col(j)));
  }
}
