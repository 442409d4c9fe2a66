#include <benchmark/benchmark.h>

#include "mumhodge/continuation.hpp"
#include "mumhodge/lmhs.hpp"
#include "mumhodge/picard_fuchs.hpp"
#include "mumhodge/symplectic.hpp"
#include "support/operators.hpp"
#include "support/random.hpp"

using namespace mumhodge;

static void BM_FrobeniusBasis(benchmark::State& state) {
  const PFOperator op = testing::gr25();
  const auto order = static_cast<std::size_t>(state.range(0));
  for (auto _ : state) benchmark::DoNotOptimize(frobenius_basis(op, order));
}
BENCHMARK(BM_FrobeniusBasis)->Arg(25)->Arg(50)->Arg(100)->Unit(benchmark::kMillisecond);

static void BM_MirrorMap(benchmark::State& state) {
  const auto fb = frobenius_basis(testing::gr25(), static_cast<std::size_t>(state.range(0)));
  for (auto _ : state) benchmark::DoNotOptimize(mirror_map(fb));
}
BENCHMARK(BM_MirrorMap)->Arg(50)->Unit(benchmark::kMillisecond);

static void BM_NormalForm(benchmark::State& state) {
  testing::Generator gen(7);
  NormalForm nf = gen.normal_form();
  if (nf.a.sign() < 0) nf = sign_flip(nf);
  const RationalMatrix g = gen.symplectic_integral();
  const RationalMatrix t = g * nf.unipotent() * *g.inverse();
  for (auto _ : state) benchmark::DoNotOptimize(normal_form(t));
}
BENCHMARK(BM_NormalForm);

static void BM_MirrorToHodge(benchmark::State& state) {
  const auto mi = MirrorInvariants::make(5, 50, -200);
  for (auto _ : state) benchmark::DoNotOptimize(mirror_to_hodge(mi, 128));
}
BENCHMARK(BM_MirrorToHodge);

static void BM_LoopAtOrigin(benchmark::State& state) {
  const PFOperator op = testing::gr25();
  const auto prec = static_cast<Precision>(state.range(0));
  const Continuator cont(op, prec);
  const MUMFrame f(op, MUMFrame::Location::origin);
  const BigComplex base = default_base_point(op, prec);
  const PathSpec loop = loop_around(base, BigComplex(prec), abs(base).to_double() / 2);
  const ComplexMatrix w = f.jets(base, prec);
  for (auto _ : state) benchmark::DoNotOptimize(transport(cont, w, w, loop));
}
BENCHMARK(BM_LoopAtOrigin)->Arg(128)->Arg(256)->Unit(benchmark::kMillisecond);

static void BM_MonodromyRepresentation(benchmark::State& state) {
  const PFOperator op = testing::gr25();
  const auto prec = static_cast<Precision>(state.range(0));
  const Continuator cont(op, prec);
  const MUMFrame origin(op, MUMFrame::Location::origin);
  const BigComplex base = default_base_point(op, prec);
  const LoopSystem system = standard_loops(op, base, prec);
  const ComplexMatrix w = origin.jets(base, prec);
  for (auto _ : state) benchmark::DoNotOptimize(monodromy_representation(cont, w, system.loops));
}
BENCHMARK(BM_MonodromyRepresentation)->Arg(128)->Unit(benchmark::kSecond)->Iterations(1);
BENCHMARK_MAIN();
