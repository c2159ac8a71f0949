#include <benchmark/benchmark.h>

#include "torsor/conductor.hpp"
#include "torsor/parse.hpp"

using namespace torsor;

static void BM_SchmidWittSymbol(benchmark::State& state) {
    long p = state.range(0);
    int m = static_cast<int>(state.range(1));
    auto spec = FieldSpec::prime(p);
    RationalFunction u = RationalFunction::var(spec.get());
    std::vector<RationalFunction> comps;
    for (int i = 0; i < m; ++i) comps.push_back(u.pow(-3 - i) + u.pow(-1));
    LocalWittElement f(p, comps);
    RationalFunction g = ring_one(u) - RationalFunction(Fq::from_int(spec.get(), 1)) * u;
    for (auto _ : state) {
        auto v = local_symbol(f, g);
        benchmark::DoNotOptimize(v);
    }
}
BENCHMARK(BM_SchmidWittSymbol)->Args({2, 1})->Args({2, 3})->Args({3, 3});

static void BM_LocalConductor(benchmark::State& state) {
    long p = state.range(0);
    auto spec = FieldSpec::prime(p);
    RationalFunction u = RationalFunction::var(spec.get());
    auto g = GroupSpec::local_local(p, {{2, 1}});
    auto cls = LocalTorsorClass::local_local(
        g, {LocalWittElement(p, {u.pow(-4) + u.pow(-3), u.pow(-2)})});
    for (auto _ : state) {
        long c = local_conductor(cls);
        benchmark::DoNotOptimize(c);
    }
}
BENCHMARK(BM_LocalConductor)->Arg(2)->Arg(3);
