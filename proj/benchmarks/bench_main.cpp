#include <benchmark/benchmark.h>

#include "acvf/appendix.hpp"
#include "acvf/coding.hpp"
#include "acvf/gammatype.hpp"
#include "acvf/lattice.hpp"
#include "acvf/random.hpp"
#include "acvf/stcomp.hpp"
#include "acvf/valspace.hpp"

using namespace acvf;

namespace {

constexpr Backend R = Backend::kRatFunc;

FieldMatrix invertible(Rng& rng, std::size_t n) {
  for (;;) {
    FieldMatrix a = zeros(R, n, n);
    for (std::size_t i = 0; i < n; ++i) {
      for (std::size_t j = 0; j < n; ++j) {
        if (rng.uniform(0, 3) != 0) a(i, j) = rng.laurent(-2, 2, 2);
      }
    }
    if (is_invertible(a)) return a;
  }
}

ModuleDesc module(Rng& rng, std::size_t n, bool closed) {
  std::vector<Component> sig;
  for (std::size_t i = 0; i < n; ++i) {
    auto tag = static_cast<Tag>(rng.uniform(0, 3));
    if (closed && (tag == Tag::kMShift || tag == Tag::kZero)) tag = Tag::kOShift;
    sig.push_back({tag, Rational(rng.uniform(-3, 3))});
  }
  return mod_make(invertible(rng, n), std::move(sig));
}

GammaType gamma_type(Rng& rng, std::size_t n) {
  QMatrix m(n, 5);
  for (std::size_t i = 0; i < n; ++i) {
    for (std::size_t j = 0; j < 5; ++j) m(i, j) = rng.rational(4, 3);
  }
  return gt_make(2, 2, std::move(m));
}

}  // namespace

static void BM_FieldMulAdd(benchmark::State& state) {
  Rng rng(1);
  const FieldElem a = rng.ratfunc(-3, 3), b = rng.ratfunc(-3, 3), c = rng.ratfunc(-3, 3);
  for (auto _ : state) benchmark::DoNotOptimize(a * b + c);
}
BENCHMARK(BM_FieldMulAdd);

static void BM_Diagonalize(benchmark::State& state) {
  Rng rng(2);
  const FieldMatrix a = invertible(rng, static_cast<std::size_t>(state.range(0)));
  for (auto _ : state) benchmark::DoNotOptimize(diagonalize(a));
}
BENCHMARK(BM_Diagonalize)->DenseRange(2, 5);

static void BM_LatMember(benchmark::State& state) {
  Rng rng(3);
  const auto n = static_cast<std::size_t>(state.range(0));
  const LatticeCode l = diagonalize(invertible(rng, n));
  FieldVector x(n);
  for (auto& xi : x) xi = rng.laurent(-2, 2, 2);
  for (auto _ : state) benchmark::DoNotOptimize(lat_member(l, x));
}
BENCHMARK(BM_LatMember)->DenseRange(2, 5);

static void BM_ModDual(benchmark::State& state) {
  Rng rng(4);
  const ModuleDesc m = module(rng, static_cast<std::size_t>(state.range(0)), false);
  for (auto _ : state) benchmark::DoNotOptimize(mod_dual(m, DualMode::kM));
}
BENCHMARK(BM_ModDual)->DenseRange(2, 5);

static void BM_Separate(benchmark::State& state) {
  Rng rng(5);
  const auto n = static_cast<std::size_t>(state.range(0));
  std::vector<FieldVector> vs(n, FieldVector(n));
  for (auto& v : vs) {
    for (auto& x : v) x = rng.laurent(-2, 2, 3);
  }
  for (auto _ : state) benchmark::DoNotOptimize(separate(vs));
}
BENCHMARK(BM_Separate)->DenseRange(2, 5);

static void BM_Jd(benchmark::State& state) {
  Rng rng(6);
  const MonomialType p{{rng.laurent(-1, 2, 2), rng.laurent(-1, 2, 2)}, {1, -1}};
  const auto d = static_cast<unsigned>(state.range(0));
  for (auto _ : state) benchmark::DoNotOptimize(jd(p, d));
}
BENCHMARK(BM_Jd)->DenseRange(1, 3);

static void BM_GammaCanonical(benchmark::State& state) {
  Rng rng(7);
  const GammaType p = gamma_type(rng, static_cast<std::size_t>(state.range(0)));
  for (auto _ : state) benchmark::DoNotOptimize(gt_canonical(p));
}
BENCHMARK(BM_GammaCanonical)->DenseRange(1, 4);

static void BM_GermEquiv(benchmark::State& state) {
  Rng rng(8);
  const auto n = static_cast<std::size_t>(state.range(0));
  const GammaType r = gamma_type(rng, n);
  FieldMatrix b = zeros(R, n, n);
  for (std::size_t i = 0; i < n; ++i) {
    b(i, i) = FieldElem::monomial(R, 1, rng.uniform(-2, 2));
    for (std::size_t j = i + 1; j < n; ++j) b(i, j) = rng.laurent(-2, 2, 2);
  }
  const GermPair p{r, b};
  for (auto _ : state) benchmark::DoNotOptimize(germ_equiv(p, p));
}
BENCHMARK(BM_GermEquiv)->DenseRange(2, 4);

static void BM_AppendixExact(benchmark::State& state) {
  const auto d = static_cast<unsigned>(state.range(0));
  const ModuleDesc l = module_of(jd({{FieldElem::monomial(R, 1, 1)}, {1}}, d));
  for (auto _ : state) benchmark::DoNotOptimize(appendix_member(l, {1, d}, 0, 1));
}
BENCHMARK(BM_AppendixExact)->DenseRange(1, 4);

static void BM_AppendixSampling(benchmark::State& state) {
  Rng rng(9);
  const ModuleDesc l = module(rng, 3, true);
  for (auto _ : state) benchmark::DoNotOptimize(appendix_member(l, {2, 1}, 200, 1));
}
BENCHMARK(BM_AppendixSampling);

BENCHMARK_MAIN();
