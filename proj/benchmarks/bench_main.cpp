#include <benchmark/benchmark.h>

#include <pstiefel/cohomology.hpp>
#include <pstiefel/geometry.hpp>

using namespace pstiefel;

static void BM_HTable(benchmark::State& state) {
    const auto ell = WeightTuple::validate({1, -2, 3, 5});
    for (auto _ : state) {
        benchmark::DoNotOptimize(h_table(ell, state.range(0)));
    }
}
BENCHMARK(BM_HTable)->Arg(16)->Arg(64)->Arg(256);

static void BM_SeriesInverse(benchmark::State& state) {
    const auto t = static_cast<std::size_t>(state.range(0));
    std::vector<Integer> c(t);
    for (std::size_t i = 0; i < t; ++i) {
        c[i] = static_cast<long>(i % 7) - 3;
    }
    c[0] = 1;
    const TruncatedSeries a(c, t);
    for (auto _ : state) {
        benchmark::DoNotOptimize(inv(a));
    }
}
BENCHMARK(BM_SeriesInverse)->Arg(16)->Arg(64)->Arg(256);

static void BM_Presentation(benchmark::State& state) {
    const auto params = StiefelParams::make(state.range(0), 3, WeightTuple::validate({1, 2, 4}));
    for (auto _ : state) {
        benchmark::DoNotOptimize(presentation(params, 7));
    }
}
BENCHMARK(BM_Presentation)->Arg(10)->Arg(100);

static void BM_SpanSweep(benchmark::State& state) {
    const auto ell = WeightTuple::validate({2, 1});
    const std::int64_t n = state.range(0);
    for (auto _ : state) {
        benchmark::DoNotOptimize(best_span_bound(n, ell, 4 * n));
    }
}
BENCHMARK(BM_SpanSweep)->Arg(8)->Arg(21)->Arg(64);
BENCHMARK_MAIN();
