#include "ddk/calogero.hpp"
#include "ddk/inner.hpp"
#include "ddk/random.hpp"

#include <benchmark/benchmark.h>

using namespace ddk;

namespace {

RootSystemPtr system_of_rank(int n) {
  return make_root_system(n == 1 ? RootSystemA::line() : RootSystemA::type_a(n));
}

RationalSection random_section(Sampler& s, const RootSystemPtr& rs, int deg) {
  return RationalSection(rs, s.polynomial(rs->ambient_dim(), deg, 4));
}

void BM_DunklApply(benchmark::State& state) {
  auto rs = system_of_rank(static_cast<int>(state.range(0)));
  DunklContext ctx(rs, 1);
  Sampler s(1);
  auto f = random_section(s, rs, 5);
  Point xi = s.direction(*rs);
  for (auto _ : state) benchmark::DoNotOptimize(dunkl_apply(ctx, xi, f));
}
BENCHMARK(BM_DunklApply)->DenseRange(1, 6);

void BM_DunklLaplacian(benchmark::State& state) {
  auto rs = system_of_rank(static_cast<int>(state.range(0)));
  DunklContext ctx(rs, 1);
  auto basis = OrthonormalBasis::standard(*rs);
  Sampler s(2);
  auto f = random_section(s, rs, 4);
  for (auto _ : state) benchmark::DoNotOptimize(dunkl_laplacian(ctx, basis, f));
}
BENCHMARK(BM_DunklLaplacian)->DenseRange(1, 4);

void BM_DiracSquareResidual(benchmark::State& state) {
  auto rs = system_of_rank(static_cast<int>(state.range(0)));
  DiracContext d(DunklContext(rs, 1), Representation::builtin("trivial", rs));
  Sampler s(3);
  VectorField f;
  for (int c = 0; c < d.components(); ++c) f.push_back(random_section(s, rs, 4));
  for (auto _ : state) benchmark::DoNotOptimize(dirac_square_residual(d, f));
}
BENCHMARK(BM_DiracSquareResidual)->DenseRange(1, 3);

void BM_InnerProductExact(benchmark::State& state) {
  auto rs = system_of_rank(static_cast<int>(state.range(0)));
  DunklContext ctx(rs, state.range(1));
  Sampler s(4);
  GaussianTestFn f{s.polynomial(rs->ambient_dim(), 3, 3)}, g{s.polynomial(rs->ambient_dim(), 3, 3)};
  for (auto _ : state) benchmark::DoNotOptimize(inner_product_exact(ctx, f, g));
}
BENCHMARK(BM_InnerProductExact)->ArgsProduct({{1, 2, 3}, {0, 1, 2}});

void BM_InnerProductMc(benchmark::State& state) {
  auto rs = system_of_rank(2);
  DunklContext ctx(rs, make_rational(1, 2));
  Sampler s(5);
  GaussianTestFn f{s.polynomial(3, 2, 3)}, g{s.polynomial(3, 2, 3)};
  for (auto _ : state) benchmark::DoNotOptimize(inner_product_mc(ctx, f, g, 100000, 7));
}
BENCHMARK(BM_InnerProductMc)->Unit(benchmark::kMillisecond);

void BM_CrosscheckA2Irrep(benchmark::State& state) {
  auto op = ExplicitOperator::a2(Variant::a2_irrep2d, 1, 1, 1);
  for (auto _ : state) benchmark::DoNotOptimize(crosscheck_generic(op, 5, 11));
}
BENCHMARK(BM_CrosscheckA2Irrep)->Unit(benchmark::kMillisecond);

}  // namespace

BENCHMARK_MAIN();
