// Benchmarks for the hot paths: exact rational-function arithmetic, the
// plethystic exponential/logarithm, the HN recursion, and DT extraction.

#include <benchmark/benchmark.h>

#include "dtq/engine.hpp"
#include "dtq/series.hpp"

using namespace dtq;

namespace {

Quiver jordan() { return Quiver({"1"}, {{"1", "1"}}); }
Quiver k2() { return Quiver({"1", "2"}, {{"1", "2"}, {"1", "2"}}); }

Stability k2_generic() {
    Stability z;
    z.charges = {Charge{Rational(-1), Rational(1)}, Charge{Rational(0), Rational(1)}};
    return z;
}

void bm_ratfunc_mul(benchmark::State& state) {
    RatFunc a = RatFunc(1) / (RatFunc(1) - RatFunc::q_power(1));
    RatFunc b = RatFunc::t_power(-3) + RatFunc::q_power(2);
    for (auto _ : state) benchmark::DoNotOptimize(a * b);
}
BENCHMARK(bm_ratfunc_mul);

void bm_ratfunc_expand(benchmark::State& state) {
    RatFunc f = RatFunc(1) / ((RatFunc(1) - RatFunc::q_power(1)) * (RatFunc(1) - RatFunc::q_power(2)));
    for (auto _ : state) benchmark::DoNotOptimize(f.expand_ascending(static_cast<int>(state.range(0))));
}
BENCHMARK(bm_ratfunc_expand)->Arg(20)->Arg(60);

void bm_exp_log_roundtrip(benchmark::State& state) {
    Quiver q = jordan();
    DimVector box{static_cast<std::int64_t>(state.range(0))};
    GradedSeries f(box, SeriesTag::virt);
    for (std::int64_t d = 1; d <= box[0]; ++d)
        f.set({d}, RatFunc::t_power(static_cast<int>(-d)) - RatFunc::q_power(1));
    for (auto _ : state) benchmark::DoNotOptimize(log_pleth(q, exp_pleth(q, f)));
}
BENCHMARK(bm_exp_log_roundtrip)->Arg(4)->Arg(8);

void bm_semistable_series_k2(benchmark::State& state) {
    Quiver q = k2();
    Stability z = k2_generic();
    std::int64_t n = state.range(0);
    DimVector box{n, n};
    for (auto _ : state) benchmark::DoNotOptimize(count_semistable_series(q, z, box));
}
BENCHMARK(bm_semistable_series_k2)->Arg(3)->Arg(5);

void bm_dt_invariants_k2(benchmark::State& state) {
    Quiver q = k2();
    Stability z = k2_generic();
    std::int64_t n = state.range(0);
    DimVector box{n, n};
    for (auto _ : state)
        for (const Slope& mu : slopes_on_box(z, box))
            benchmark::DoNotOptimize(dt_invariants(q, z, mu, box));
}
BENCHMARK(bm_dt_invariants_k2)->Arg(3)->Arg(4);

void bm_framed_pbw_jordan(benchmark::State& state) {
    Quiver q = jordan();
    Stability z = Stability::trivial(1);
    DimVector box{state.range(0)};
    for (auto _ : state)
        benchmark::DoNotOptimize(framed_pbw_check(q, {2}, z, Slope(Rational(0)), box));
}
BENCHMARK(bm_framed_pbw_jordan)->Arg(4)->Arg(6);

}  // namespace

BENCHMARK_MAIN();
