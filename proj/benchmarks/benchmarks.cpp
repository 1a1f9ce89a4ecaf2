#include <benchmark/benchmark.h>

#include <origraph/chromatic.hpp>
#include <origraph/hom_search.hpp>
#include <origraph/random_model.hpp>
#include <origraph/tournaments.hpp>
#include <origraph/witness.hpp>

using namespace origraph;

namespace {

SampleParams pipeline_params(int n) {
    SampleParams p;
    p.base = directed_cycle(3);
    p.part_size = n;
    p.girth_target = 4;
    p.epsilon = SampleParams::default_epsilon(4);
    p.colour_bound = 3;
    p.seed = 12345;
    return p;
}

void BM_girth_blowup(benchmark::State& state) {
    const auto g = blow_up(directed_cycle(3), static_cast<int>(state.range(0))).graph;
    for (auto _ : state)
        benchmark::DoNotOptimize(girth(g));
}
BENCHMARK(BM_girth_blowup)->Arg(20)->Arg(60);

void BM_enumerate_tournaments(benchmark::State& state) {
    const int order = static_cast<int>(state.range(0));
    for (auto _ : state)
        benchmark::DoNotOptimize(enumerate_tournaments(order).size());
}
BENCHMARK(BM_enumerate_tournaments)->Arg(5)->Arg(6)->Arg(7);

void BM_chromatic_number_cycle(benchmark::State& state) {
    const auto cycle = directed_cycle(static_cast<int>(state.range(0)));
    for (auto _ : state)
        benchmark::DoNotOptimize(oriented_chromatic_number(cycle, 8));
}
BENCHMARK(BM_chromatic_number_cycle)->Arg(5)->Arg(8)->Arg(11);

void BM_construct_and_verify(benchmark::State& state) {
    for (auto _ : state) {
        const Witness w = construct(6, static_cast<int>(state.range(0)));
        benchmark::DoNotOptimize(verify_witness(w, true).ok());
    }
}
BENCHMARK(BM_construct_and_verify)->Arg(4)->Arg(7);

void BM_run_pipeline(benchmark::State& state) {
    const auto params = pipeline_params(static_cast<int>(state.range(0)));
    for (auto _ : state)
        benchmark::DoNotOptimize(run_pipeline(params).removed.size());
}
BENCHMARK(BM_run_pipeline)->Arg(30)->Arg(120);

void BM_find_homomorphism_dstar(benchmark::State& state) {
    const auto outcome = run_pipeline(pipeline_params(static_cast<int>(state.range(0))));
    const auto c3 = directed_cycle(3);
    for (auto _ : state)
        benchmark::DoNotOptimize(find_homomorphism(outcome.d_star, c3).has_value());
}
BENCHMARK(BM_find_homomorphism_dstar)->Arg(30)->Arg(120);

} // namespace

BENCHMARK_MAIN();
