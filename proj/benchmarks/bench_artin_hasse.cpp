#include <benchmark/benchmark.h>

#include <random>

#include "torsor/artin_hasse.hpp"

using namespace torsor;

static void BM_DecomposeUnit(benchmark::State& state) {
    long p = state.range(0);
    long n = state.range(1);
    auto spec = FieldSpec::prime(p);
    artin_hasse_series(p, n);
    std::mt19937_64 rng(3);
    std::vector<Fq> c(static_cast<std::size_t>(n), Fq::from_int(spec.get(), 0));
    c[0] = Fq::from_int(spec.get(), 1);
    for (long k = 1; k < n; ++k) c[static_cast<std::size_t>(k)] = Fq::from_index(spec.get(), rng() % p);
    auto v = PrincipalUnit::from_coeffs(n, c);
    for (auto _ : state) {
        auto dec = decompose_unit(v);
        benchmark::DoNotOptimize(dec);
    }
}
BENCHMARK(BM_DecomposeUnit)->Args({2, 16})->Args({2, 32})->Args({3, 27})->Args({5, 25});

static void BM_ArtinHasseSeries(benchmark::State& state) {
    long terms = state.range(0);
    for (auto _ : state) {
        auto f = artin_hasse_series_q(5, terms);
        benchmark::DoNotOptimize(f);
    }
}
BENCHMARK(BM_ArtinHasseSeries)->Arg(64)->Arg(128);
