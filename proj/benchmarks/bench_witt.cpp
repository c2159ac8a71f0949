#include <benchmark/benchmark.h>

#include <random>

#include "torsor/witt.hpp"
#include "torsor/field.hpp"

using namespace torsor;

static void BM_WittAddFq(benchmark::State& state) {
    long p = state.range(0);
    int m = static_cast<int>(state.range(1));
    auto spec = FieldSpec::prime(p);
    WittLaws::get(p, m, true);
    std::mt19937_64 rng(1);
    std::vector<Fq> av, bv;
    for (int i = 0; i < m; ++i) {
        av.push_back(Fq::from_index(spec.get(), rng() % spec->order()));
        bv.push_back(Fq::from_index(spec.get(), rng() % spec->order()));
    }
    WittVector<Fq> a(p, av), b(p, bv);
    for (auto _ : state) {
        auto s = witt_add(a, b, true);
        benchmark::DoNotOptimize(s);
    }
}
BENCHMARK(BM_WittAddFq)->Args({2, 3})->Args({3, 3})->Args({2, 5})->Args({3, 4});

static void BM_WittMulFq(benchmark::State& state) {
    long p = state.range(0);
    int m = static_cast<int>(state.range(1));
    auto spec = FieldSpec::prime(p);
    WittLaws::get(p, m, true);
    std::mt19937_64 rng(2);
    std::vector<Fq> av, bv;
    for (int i = 0; i < m; ++i) {
        av.push_back(Fq::from_index(spec.get(), rng() % spec->order()));
        bv.push_back(Fq::from_index(spec.get(), rng() % spec->order()));
    }
    WittVector<Fq> a(p, av), b(p, bv);
    for (auto _ : state) {
        auto s = witt_mul(a, b, true);
        benchmark::DoNotOptimize(s);
    }
}
BENCHMARK(BM_WittMulFq)->Args({2, 3})->Args({3, 3});

static void BM_GhostUnghost(benchmark::State& state) {
    long p = state.range(0);
    std::vector<BigInt> v{BigInt(7), BigInt(-3), BigInt(11)};
    WittVector<BigInt> a(p, v);
    for (auto _ : state) {
        auto w = unghost(p, ghost(a));
        benchmark::DoNotOptimize(w);
    }
}
BENCHMARK(BM_GhostUnghost)->Arg(2)->Arg(3);
