#include <benchmark/benchmark.h>

#include <random>

#include "vres/bracket.hpp"
#include "vres/random_ideal.hpp"
#include "vres/shorten.hpp"

using namespace vres;

namespace {

const char* kExampleIdeal =
    "<x2*x3, x1^4*x2^2*x4, x0^2*x1^4*x4, x1^5*x2^2, x0^2*x1^5, x1^4*x3^3*x4, x1^5*x3^3>";

MonomialIdeal example_ideal(const Fan& f) { return parse_ideal(kExampleIdeal, f.ray_names()); }

void bm_taylor_minimize(benchmark::State& state) {
    Fan f = builtin_fan("p2p1");
    MonomialIdeal I = example_ideal(f);
    PrimeField F(32003);
    for (auto _ : state)
        benchmark::DoNotOptimize(minimize(taylor_complex(I), F));
}
BENCHMARK(bm_taylor_minimize);

void bm_koszul_betti(benchmark::State& state) {
    Fan f = builtin_fan("p2p1");
    MonomialIdeal I = example_ideal(f);
    PrimeField F(32003);
    for (auto _ : state)
        benchmark::DoNotOptimize(betti_via_koszul_strands(I, F));
}
BENCHMARK(bm_koszul_betti);

void bm_fan_validation(benchmark::State& state) {
    Fan f = builtin_fan("p2p1");
    for (auto _ : state)
        benchmark::DoNotOptimize(validate_fan(f, 1000, 7));
}
BENCHMARK(bm_fan_validation);

void bm_bracket_pipeline(benchmark::State& state) {
    Fan f = builtin_fan("p2p1");
    MonomialIdeal I = example_ideal(f);
    PrimeField F(32003);
    for (auto _ : state)
        benchmark::DoNotOptimize(run_bracket(I, f, 6, F));
}
BENCHMARK(bm_bracket_pipeline);

void bm_short_pipeline(benchmark::State& state) {
    Fan f = builtin_fan("p2p1");
    MonomialIdeal I = example_ideal(f);
    PrimeField F(32003);
    for (auto _ : state)
        benchmark::DoNotOptimize(run_short(I, f, 0, F));
}
BENCHMARK(bm_short_pipeline);

void bm_random_corpus_instance(benchmark::State& state) {
    Fan f = builtin_fan("hirzebruch2");
    PrimeField F(32003);
    std::mt19937_64 rng(11);
    std::vector<MonomialIdeal> pool;
    for (int i = 0; i < 16; ++i) pool.push_back(random_b_saturated_ideal(f, rng));
    std::size_t i = 0;
    for (auto _ : state) {
        benchmark::DoNotOptimize(run_bracket(pool[i % pool.size()], f, 0, F));
        ++i;
    }
}
BENCHMARK(bm_random_corpus_instance);

}  // namespace

BENCHMARK_MAIN();
