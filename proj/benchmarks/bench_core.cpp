#include "cypair/birmod.hpp"
#include "cypair/registry.hpp"
#include "cypair/singclass.hpp"
#include "cypair/verifier.hpp"

#include <benchmark/benchmark.h>

using namespace cypair;

namespace {
const Ring G3({"x", "y", "z"});
}

static void BM_MilnorCusp(benchmark::State& state) {
  auto n = std::to_string(state.range(0));
  Poly f = Poly::parse("x^" + n + "+y^" + n + "+z^" + n + "+x*y*z", G3);
  for (auto _ : state) benchmark::DoNotOptimize(singclass::milnor_number(f));
}
BENCHMARK(BM_MilnorCusp)->DenseRange(3, 6)->Unit(benchmark::kMillisecond);

static void BM_MilnorDuVal(benchmark::State& state) {
  Poly f = Poly::parse("x^2+y^2+z^" + std::to_string(state.range(0) + 1), G3);
  for (auto _ : state) benchmark::DoNotOptimize(singclass::milnor_number(f));
}
BENCHMARK(BM_MilnorDuVal)->DenseRange(2, 8, 2)->Unit(benchmark::kMillisecond);

static void BM_ClassifyNormalForms(benchmark::State& state) {
  std::vector<Poly> rows;
  for (const char* s : {"x^2+y^3+z^5", "x^2+y^4+z^4+x*y*z", "x^3+y^4+z^5+x*y*z", "x^2+y^2*z^2", "x*y*z+x^3+y^4"})
    rows.push_back(Poly::parse(s, G3));
  for (auto _ : state)
    for (const auto& r : rows) benchmark::DoNotOptimize(singclass::classify(r));
}
BENCHMARK(BM_ClassifyNormalForms)->Unit(benchmark::kMillisecond);

static void BM_PointBlowupTransform(benchmark::State& state) {
  Ring p4({"x0", "x1", "x2", "x3", "x4"});
  auto st = birmod::make_point_step(p4, singlocus::ProjPoint::coordinate(5, 0), "f", "E");
  Poly x = Poly::parse("x1^4+x2^4+x3^4+x0*x1*x2*x3+x4*(x0^3+x4^3)", p4);
  for (auto _ : state) benchmark::DoNotOptimize(birmod::total_and_proper_transform(x, st));
}
BENCHMARK(BM_PointBlowupTransform);

static void BM_RunCase(benchmark::State& state) {
  static const auto reg = verifier::Registry::load_file(CYPAIR_BENCH_REGISTRY);
  const auto& c = reg.cases().at(static_cast<std::size_t>(state.range(0)));
  state.SetLabel(c.id);
  for (auto _ : state) benchmark::DoNotOptimize(verifier::run_case(c));
}
BENCHMARK(BM_RunCase)->DenseRange(0, 6)->Unit(benchmark::kMillisecond);
BENCHMARK_MAIN();
