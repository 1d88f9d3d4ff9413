// Parallel kernels against their serial reference versions.

#include <benchmark/benchmark.h>

#include "cumtree/cumulants.hpp"
#include "cumtree/enumerate.hpp"
#include "cumtree/troupe.hpp"

using namespace cumtree;

namespace {

template <bool Parallel>
void weighted_sum_bpt(benchmark::State& state)
{
    WeightedTroupe tau = troupe_right_two_monomial(RingElem::q(), RingElem(2));
    ColorWord w = uniform_word(static_cast<int>(state.range(0)));
    for (auto _ : state) {
        RingElem r = Parallel ? weighted_sum(tau, TreeFamily::bpt, w) : reference::weighted_sum(tau, TreeFamily::bpt, w);
        benchmark::DoNotOptimize(r);
    }
}

template <bool Parallel>
void weighted_sum_dbpt(benchmark::State& state)
{
    WeightedTroupe tau = troupe_all();
    ColorWord w = uniform_word(static_cast<int>(state.range(0)));
    for (auto _ : state) {
        RingElem r = Parallel ? weighted_sum(tau, TreeFamily::dbpt, w) : reference::weighted_sum(tau, TreeFamily::dbpt, w);
        benchmark::DoNotOptimize(r);
    }
}

// Two colors, moments of words up to the given length.
MomentFunctional two_color_moments(int max_len)
{
    WordTable t(2, max_len);
    for (int n = 1; n <= max_len; ++n)
        for (const ColorWord& w : all_words(2, n)) {
            Rational v(1);
            for (Color c : w)
                v *= Rational(c.index + 1);
            t.set(w, RingElem(v * n));
        }
    return MomentFunctional{t};
}

template <bool Parallel>
void cumulants_free(benchmark::State& state)
{
    MomentFunctional phi = two_color_moments(static_cast<int>(state.range(0)));
    for (auto _ : state) {
        CumulantTable c = Parallel ? moments_to_cumulants(phi, CumulantKind::free)
                                   : reference::moments_to_cumulants(phi, CumulantKind::free);
        benchmark::DoNotOptimize(c);
    }
}

template <bool Parallel>
void cumulants_classical(benchmark::State& state)
{
    MomentFunctional phi = two_color_moments(static_cast<int>(state.range(0)));
    for (auto _ : state) {
        CumulantTable c = Parallel ? moments_to_cumulants(phi, CumulantKind::classical)
                                   : reference::moments_to_cumulants(phi, CumulantKind::classical);
        benchmark::DoNotOptimize(c);
    }
}

}  // namespace

BENCHMARK(weighted_sum_bpt<false>)->Name("weighted_sum_bpt/serial")->DenseRange(10, 12)->Unit(benchmark::kMillisecond);
BENCHMARK(weighted_sum_bpt<true>)->Name("weighted_sum_bpt/parallel")->DenseRange(10, 12)->Unit(benchmark::kMillisecond)->UseRealTime();
BENCHMARK(weighted_sum_dbpt<false>)->Name("weighted_sum_dbpt/serial")->DenseRange(8, 9)->Unit(benchmark::kMillisecond);
BENCHMARK(weighted_sum_dbpt<true>)->Name("weighted_sum_dbpt/parallel")->DenseRange(8, 9)->Unit(benchmark::kMillisecond)->UseRealTime();
BENCHMARK(cumulants_free<false>)->Name("cumulants_free/serial")->DenseRange(7, 8)->Unit(benchmark::kMillisecond);
BENCHMARK(cumulants_free<true>)->Name("cumulants_free/parallel")->DenseRange(7, 8)->Unit(benchmark::kMillisecond)->UseRealTime();
BENCHMARK(cumulants_classical<false>)->Name("cumulants_classical/serial")->Arg(7)->Unit(benchmark::kMillisecond);
BENCHMARK(cumulants_classical<true>)->Name("cumulants_classical/parallel")->Arg(7)->Unit(benchmark::kMillisecond)->UseRealTime();

BENCHMARK_MAIN();
