#include <benchmark/benchmark.h>

#include "charp/expr.hpp"
#include "charp/hp_groups.hpp"
#include "charp/random.hpp"

using namespace charp;

namespace {

void BM_FqMul(benchmark::State& state) {
    auto f = FqField::make(2, std::uint32_t(state.range(0)));
    RandomSource rng(1);
    fq_repr a = f->element(rng.below(f->q() - 1) + 1);
    fq_repr b = f->element(rng.below(f->q() - 1) + 1);
    for (auto _ : state) {
        a = f->mul(a, b);
        benchmark::DoNotOptimize(a);
    }
}
BENCHMARK(BM_FqMul)->Arg(2)->Arg(4)->Arg(8);

void BM_LaurentMul(benchmark::State& state) {
    auto T = parse_tower("GF(9)((t))");
    RandomSource rng(2);
    std::int64_t spread = state.range(0);
    FieldElement a = random_element(T, 1, rng, -spread, spread, std::uint32_t(spread));
    FieldElement b = random_element(T, 1, rng, -spread, spread, std::uint32_t(spread));
    for (auto _ : state) {
        FieldElement c = a * b;
        benchmark::DoNotOptimize(c);
    }
}
BENCHMARK(BM_LaurentMul)->Arg(4)->Arg(16)->Arg(64);

void BM_RationalReduce(benchmark::State& state) {
    auto K = parse_tower("Frac GF(3)[b1,b2]");
    RandomSource rng(3);
    std::vector<FieldElement> inputs;
    for (int i = 0; i < 32; ++i) inputs.push_back(random_tower_element(K, rng));
    size_t i = 0;
    for (auto _ : state) {
        auto q = reduce_mod_exact(top_form(inputs[i++ % inputs.size()]));
        benchmark::DoNotOptimize(q);
    }
}
BENCHMARK(BM_RationalReduce);

void BM_HpClass(benchmark::State& state) {
    std::string desc = "GF(4)";
    for (std::int64_t h = 0; h < state.range(0); ++h)
        desc += "((t" + std::to_string(h + 1) + "))";
    auto T = parse_tower(desc);
    RandomSource rng(4);
    std::vector<FieldElement> inputs;
    for (int i = 0; i < 32; ++i) inputs.push_back(random_tower_element(T, rng, -12, 6));
    size_t i = 0;
    for (auto _ : state) {
        auto r = hp_class_coefficient(inputs[i++ % inputs.size()]);
        benchmark::DoNotOptimize(r);
    }
}
BENCHMARK(BM_HpClass)->Arg(1)->Arg(2)->Arg(3);

void BM_WeierstrassDivide(benchmark::State& state) {
    auto ring = parse_series_ring("GF(5)[[u]][[X,T]] D=" + std::to_string(state.range(0)));
    RandomSource rng(5);
    TruncatedSeries f = random_regular_series(ring, 3, rng);
    TruncatedSeries g = random_series(ring, rng, 10);
    for (auto _ : state) {
        auto d = weierstrass_divide(g, f, 3);
        benchmark::DoNotOptimize(d);
    }
}
BENCHMARK(BM_WeierstrassDivide)->Arg(8)->Arg(12)->Arg(16);

void BM_ArtinSchreierSolve(benchmark::State& state) {
    auto ring = parse_series_ring("GF(2)[[t]] D=" + std::to_string(state.range(0)));
    RandomSource rng(6);
    TruncatedSeries a = random_series(ring, rng, 12, 1);
    for (auto _ : state) {
        auto b = artin_schreier_solve(a, std::uint32_t(state.range(0)));
        benchmark::DoNotOptimize(b);
    }
}
BENCHMARK(BM_ArtinSchreierSolve)->Arg(16)->Arg(64);

}  // namespace

BENCHMARK_MAIN();
