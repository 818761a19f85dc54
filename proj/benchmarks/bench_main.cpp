#include <benchmark/benchmark.h>

#include "hds/classical.hpp"
#include "hds/dedekind.hpp"
#include "hds/eta.hpp"
#include "hds/lfunctions.hpp"
#include "hds/quasi_elliptic.hpp"

using namespace hds;

namespace {

ModMatrix matrix_A(const Field& F) {
  return {F.elem(-2, -1), F.elem(1, 1), F.elem(3, 1), F.elem(-2, -1)};
}

TruncationParams tol(double t) {
  TruncationParams p;
  p.target_tol = t;
  return p;
}

void BM_ClassicalS(benchmark::State& state) {
  const Int c = state.range(0);
  for (auto _ : state) benchmark::DoNotOptimize(classical_s(c - 1, c));
}
BENCHMARK(BM_ClassicalS)->Arg(97)->Arg(100003)->Arg(1000000007);

void BM_Lambda(benchmark::State& state) {
  const Field F = make_field(7);
  const UHPoint z{cplx(0.3, 0.9), cplx(-0.2, 1.2)};
  const double t = std::pow(10.0, -static_cast<double>(state.range(0)));
  for (auto _ : state) benchmark::DoNotOptimize(lambda(F, z, 0, tol(t)));
}
BENCHMARK(BM_Lambda)->DenseRange(6, 12, 3)->Unit(benchmark::kMillisecond);

void BM_SumS(benchmark::State& state) {
  const Field F = make_field(7);
  const UHPoint z{cplx(0.3, 1.1)};
  for (auto _ : state)
    benchmark::DoNotOptimize(sum_s(F.elem(-2, -1), F.elem(3, 1), z, 0, tol(1e-10)));
}
BENCHMARK(BM_SumS)->Unit(benchmark::kMillisecond);

void BM_Psi(benchmark::State& state) {
  const Field F = make_field(7);
  const ModMatrix A = matrix_A(F);
  for (auto _ : state) benchmark::DoNotOptimize(psi(A, tol(1e-10)));
}
BENCHMARK(BM_Psi)->Unit(benchmark::kMillisecond);

void BM_LA(benchmark::State& state) {
  const Field F = make_field(7);
  const ModMatrix A = matrix_A(F);
  const double X = static_cast<double>(state.range(0));
  for (auto _ : state) benchmark::DoNotOptimize(l_a(A, cplx(2.0, 0.0), X));
}
BENCHMARK(BM_LA)->Arg(5000)->Arg(50000)->Unit(benchmark::kMillisecond);

void BM_EisDz1(benchmark::State& state) {
  const Field F = make_field(7);
  EisParams p;
  p.norm_bound = static_cast<double>(state.range(0));
  const UHPoint z{cplx(0.1, 0.8), cplx(0.0, 2.15540049899)};
  for (auto _ : state) benchmark::DoNotOptimize(eis_dz1(F, z, 2.0, p));
}
BENCHMARK(BM_EisDz1)->Arg(10000)->Arg(100000)->Unit(benchmark::kMillisecond);

void BM_GeodesicPeriod(benchmark::State& state) {
  const Field F = make_field(7);
  const ModMatrix A = matrix_A(F);
  PeriodParams p;
  p.eis.norm_bound = 1e4;
  p.order = 32;
  p.max_order = 256;
  for (auto _ : state) benchmark::DoNotOptimize(geodesic_period(A, 2.0, p));
}
BENCHMARK(BM_GeodesicPeriod)->Unit(benchmark::kMillisecond);

}  // namespace

BENCHMARK_MAIN();
