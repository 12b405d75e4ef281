#include <gtest/gtest.h>

#include "support/generators.hpp"

using namespace acvf;
using namespace acvf::testing;

namespace {

QMatrix qm(std::initializer_list<std::initializer_list<long>> rows) {
  QMatrix m(rows.size(), rows.begin()->size());
  std::size_t i = 0;
  for (const auto& r : rows) {
    std::size_t j = 0;
    for (long v : r) m(i, j++) = v;
    ++i;
  }
  return m;
}

// Point with one ω scale and one ε scale, rows (ω, 1, ε).
GammaType pt(std::size_t inf, std::size_t eps, std::initializer_list<std::initializer_list<long>> rows) {
  return gt_make(inf, eps, qm(rows));
}

}  // namespace

TEST(GammaPush, Examples) {
  const auto p = pt(1, 0, {{1, 0}, {0, 3}});  // (ω₁, 3)
  EXPECT_TRUE(gt_equal(gt_push(p, q_identity(2), {0, 0}), p));

  const auto d = gt_push(p, qm({{1, -1}}), {0});  // ω₁ − 3
  EXPECT_TRUE(gt_equal(d, pt(1, 0, {{1, -3}})));
  EXPECT_TRUE(gt_equal(d, pt(1, 0, {{1, 0}})));
  EXPECT_FALSE(gt_limit(d).has_value());

  const auto e = pt(0, 1, {{3, 1}, {5, 0}});  // (3+ε₁, 5)
  EXPECT_TRUE(gt_equal(gt_push(e, qm({{1, 0}, {1, 1}}), {0, 0}), pt(0, 1, {{3, 1}, {8, 1}})));
}

TEST(GammaProduct, Examples) {
  const auto w = pt(1, 0, {{1, 0}});
  const auto pq = gt_product(w, w);
  EXPECT_TRUE(gt_equal(pq, pt(2, 0, {{1, 0, 0}, {0, 1, 0}})));
  const auto qp = gt_product(w, w);
  // Swapping the coordinates of p⊗q gives y ≫ x, a different type.
  const auto swapped = gt_push(qp, qm({{0, 1}, {1, 0}}), {0, 0});
  EXPECT_FALSE(gt_equal(pq, swapped));
  // x − y is positive and unbounded under p⊗q.
  const auto diff = gt_push(pq, qm({{1, -1}}), {0});
  EXPECT_TRUE(gt_equal(diff, w));

  const auto c1 = gt_constant({2}), c2 = gt_constant({7});
  const auto a = gt_product(c1, c2), b = gt_product(c2, c1);
  EXPECT_TRUE(gt_equal(a, gt_push(b, qm({{0, 1}, {1, 0}}), {0, 0})));
  EXPECT_EQ(*gt_limit(a), (QVector{2, 7}));
}

TEST(GammaLimit, Examples) {
  EXPECT_EQ(*gt_limit(pt(0, 1, {{3, 1}, {5, 0}})), (QVector{3, 5}));
  EXPECT_FALSE(gt_limit(pt(1, 0, {{1, 0}, {0, 0}})).has_value());
  EXPECT_EQ(*gt_limit(pt(0, 2, {{0, 1, 0}, {0, 0, 1}})), (QVector{0, 0}));
}

TEST(GammaDecompose, Examples) {
  auto d = gt_decompose(pt(1, 1, {{1, 0, 0}, {1, 0, 1}}));  // (ω₁, ω₁+ε₁)
  EXPECT_EQ(d.T, qm({{1, -1}, {1, 0}}));
  EXPECT_EQ(d.finite, 1U);
  d = gt_decompose(pt(0, 1, {{3, 1}, {5, 0}}));
  EXPECT_EQ(d.T, q_identity(2));
  EXPECT_EQ(d.finite, 2U);
  d = gt_decompose(pt(2, 0, {{1, 0, 0}, {0, 1, 0}}));
  EXPECT_EQ(d.T, q_identity(2));
  EXPECT_EQ(d.finite, 0U);
}

TEST(GammaTranslate, Examples) {
  auto [c, p0] = gt_translate0(pt(0, 1, {{3, 1}}));
  EXPECT_EQ(c, (QVector{-3}));
  EXPECT_TRUE(gt_equal(p0, pt(0, 1, {{0, 1}})));

  std::tie(c, p0) = gt_translate0(pt(1, 0, {{1, 7}, {0, 2}}));
  EXPECT_EQ(c, (QVector{-7, -2}));
  EXPECT_TRUE(gt_equal(p0, pt(1, 0, {{1, 0}, {0, 0}})));

  std::tie(c, p0) = gt_translate0(gt_constant({4}));
  EXPECT_EQ(c, (QVector{-4}));
  EXPECT_TRUE(gt_equal(p0, gt_constant({0})));
}

TEST(GammaStab, Examples) {
  EXPECT_TRUE(gt_stab_member(pt(1, 0, {{1, 0}}), {5}));
  EXPECT_FALSE(gt_stab_member(pt(0, 1, {{0, 1}}), {1}));
  Rng rng(3);
  for (int k = 0; k < 20; ++k) {
    const auto r = random_gamma_type(rng, 3);
    EXPECT_TRUE(gt_stab_member(r, {0, 0, 0}));
  }
}

TEST(GammaCanonical, InvariantUnderRebase) {
  Rng rng(61);
  for (int it = 0; it < 100; ++it) {
    const auto n = static_cast<std::size_t>(rng.uniform(1, 4));
    const auto p = random_gamma_type(rng, n);
    const auto c = gt_canonical(p);
    for (int k = 0; k < 30; ++k) ASSERT_EQ(gt_canonical(random_rebase(rng, p)), c);
  }
}

TEST(GammaCanonical, SeparatesTypesByAffineSigns) {
  // Brute force: two points with different canonical forms must disagree on
  // the sign of some small affine functional, and equal forms never do.
  Rng rng(62);
  int distinct = 0;
  for (int it = 0; it < 300; ++it) {
    const auto p = random_gamma_type(rng, 2, 1);
    const auto q = rng.coin() ? random_rebase(rng, p) : random_gamma_type(rng, 2, 1);
    // Align scale spaces: p⊗nothing is not needed when both use ≤1 scale per
    // block; embed both into (ω, 1, ε).
    auto widen = [](const GammaType& t) {
      QMatrix m(t.point.n, 3);
      for (std::size_t i = 0; i < t.point.n; ++i) {
        if (t.point.inf == 1) m(i, 0) = t.point.coeffs(i, 0);
        m(i, 1) = t.point.coeffs(i, t.point.inf);
        if (t.point.eps == 1) m(i, 2) = t.point.coeffs(i, t.point.inf + 1);
      }
      return gt_make(1, 1, m);
    };
    const auto wp = widen(p), wq = widen(q);
    bool differ = false;
    for (long a0 = -4; a0 <= 4 && !differ; ++a0) {
      for (long a1 = -4; a1 <= 4 && !differ; ++a1) {
        for (long b2 = -24; b2 <= 24 && !differ; ++b2) {
          const Rational b(b2, 6);
          const auto sp = scale_sign(gt_affine_value(wp.point, {a0, a1}, b));
          const auto sq = scale_sign(gt_affine_value(wq.point, {a0, a1}, b));
          differ = sp != sq;
        }
      }
    }
    if (gt_equal(p, q)) {
      EXPECT_FALSE(differ);
    } else {
      ++distinct;
      EXPECT_TRUE(differ);
    }
  }
  EXPECT_GT(distinct, 50);
}

TEST(GammaDecompose, Properties) {
  Rng rng(63);
  for (int it = 0; it < 150; ++it) {
    const auto n = static_cast<std::size_t>(rng.uniform(1, 4));
    const auto p = random_gamma_type(rng, n);
    const auto d = gt_decompose(p);
    ASSERT_TRUE(q_is_invertible(d.T));
    const auto img = gt_push(p, d.T, QVector(n));
    QMatrix fin(d.finite, n);
    for (std::size_t i = 0; i < d.finite; ++i) fin(i, i) = 1;
    QMatrix sel(d.finite, n);
    for (std::size_t i = 0; i < d.finite; ++i) sel(i, i) = 1;
    if (d.finite > 0) EXPECT_TRUE(gt_limit(gt_push(img, sel, QVector(d.finite))).has_value());
    const std::size_t k = n - d.finite;
    const GammaPoint g = gt_canonical(img);
    for (int s = 0; s < 20 && k > 0; ++s) {
      QVector a(n);
      bool nz = false;
      for (std::size_t i = d.finite; i < n; ++i) {
        a[i] = rng.uniform(0, 3);
        nz = nz || a[i] != 0;
      }
      if (!nz) continue;
      QMatrix row(1, n);
      for (std::size_t i = 0; i < n; ++i) row(0, i) = a[i];
      EXPECT_FALSE(gt_limit(gt_push(img, row, {0})).has_value());
      const auto v = gt_affine_value(g, a, 0);
      ScaleElem omega(v.begin(), v.begin() + static_cast<std::ptrdiff_t>(g.inf));
      EXPECT_EQ(scale_sign(omega), 1);
    }
  }
}

TEST(GammaTranslate, ZeroStandardColumn) {
  Rng rng(64);
  for (int it = 0; it < 150; ++it) {
    const auto n = static_cast<std::size_t>(rng.uniform(1, 4));
    const auto [c, p0] = gt_translate0(random_gamma_type(rng, n));
    const auto g = gt_canonical(p0);
    for (std::size_t i = 0; i < n; ++i) EXPECT_EQ(g.coeffs(i, g.std_col()), 0);
    // Every coordinate pushforward is then 0-definable: zero standard part.
    for (std::size_t i = 0; i < n; ++i) {
      QMatrix row(1, n);
      row(0, i) = 1;
      const auto gi = gt_canonical(gt_push(p0, row, {0}));
      EXPECT_EQ(gi.coeffs(0, gi.std_col()), 0);
    }
  }
}

TEST(GammaStab, GroupAndBasis) {
  Rng rng(65);
  for (int it = 0; it < 100; ++it) {
    const auto n = static_cast<std::size_t>(rng.uniform(1, 4));
    const auto r = random_gamma_type(rng, n);
    const QMatrix b = gt_stabilizer_basis(r);
    std::vector<QVector> members;
    for (int s = 0; s < 6; ++s) {
      QVector c(n);
      if (b.cols() > 0 && rng.coin()) {
        QVector y(b.cols());
        for (auto& x : y) x = rng.rational(3, 2);
        c = b * y;
      } else {
        for (auto& x : c) x = rng.rational(3, 2);
      }
      const bool in = gt_stab_member(r, c);
      EXPECT_EQ(in, q_solve_in_span(b, c).has_value());
      if (in) members.push_back(c);
    }
    for (const auto& x : members) {
      QVector neg(n);
      for (std::size_t i = 0; i < n; ++i) neg[i] = -x[i];
      EXPECT_TRUE(gt_stab_member(r, neg));
      for (const auto& y : members) {
        QVector sum(n);
        for (std::size_t i = 0; i < n; ++i) sum[i] = x[i] + y[i];
        EXPECT_TRUE(gt_stab_member(r, sum));
      }
    }
  }
}

TEST(GammaPush, Functorial) {
  Rng rng(66);
  for (int it = 0; it < 100; ++it) {
    const auto n = static_cast<std::size_t>(rng.uniform(1, 4));
    const auto m = static_cast<std::size_t>(rng.uniform(1, 4));
    const auto k = static_cast<std::size_t>(rng.uniform(1, 4));
    const auto p = random_gamma_type(rng, n);
    QMatrix a(m, n), b(k, m);
    for (std::size_t i = 0; i < m; ++i) for (std::size_t j = 0; j < n; ++j) a(i, j) = rng.rational(3, 2);
    for (std::size_t i = 0; i < k; ++i) for (std::size_t j = 0; j < m; ++j) b(i, j) = rng.rational(3, 2);
    const auto twice = gt_push(gt_push(p, a, QVector(m)), b, QVector(k));
    EXPECT_EQ(gt_canonical(twice), gt_canonical(gt_push(p, b * a, QVector(k))));
  }
}

TEST(GammaEqual, Equivalence) {
  Rng rng(67);
  for (int it = 0; it < 100; ++it) {
    const auto p = random_gamma_type(rng, 2);
    const auto q = random_rebase(rng, p);
    const auto r = random_rebase(rng, q);
    EXPECT_TRUE(gt_equal(p, p));
    EXPECT_EQ(gt_equal(p, q), gt_equal(q, p));
    EXPECT_TRUE(gt_equal(p, r));
  }
}
