#include <benchmark/benchmark.h>

#include "pspos/continued_fraction.hpp"
#include "pspos/distinctness.hpp"
#include "pspos/enumerate.hpp"
#include "pspos/seifert.hpp"
#include "pspos/tangle_knots.hpp"
#include "pspos/twisted_torus.hpp"

#include <random>

using namespace pspos;

namespace {

std::vector<ExtRational> random_rationals(std::size_t count) {
    std::mt19937_64 rng(123);
    std::uniform_int_distribution<long long> num(-(1LL << 40), 1LL << 40);
    std::uniform_int_distribution<long long> den(1, 1LL << 30);
    std::vector<ExtRational> out;
    out.reserve(count);
    while (out.size() < count) out.push_back(ExtRational(Int(num(rng)), Int(den(rng))));
    return out;
}

void BM_CfRoundtrip(benchmark::State& state) {
    auto values = random_rationals(256);
    std::size_t i = 0;
    for (auto _ : state) {
        const auto& r = values[i++ % values.size()];
        benchmark::DoNotOptimize(cf_to_rational(rational_to_cf(r)));
    }
}
BENCHMARK(BM_CfRoundtrip);

void BM_SfsHomeomorphic(benchmark::State& state) {
    SfsDescriptor d1(SfsBase::DiskD2,
                     {ExtRational(4, 3), ExtRational(16 * Int(977) - 7, 9 * Int(977) - 4)});
    SfsDescriptor d2(SfsBase::DiskD2,
                     {ExtRational(-1, 3), ExtRational(16 * Int(977) - 7, 9 * Int(977) - 4)});
    for (auto _ : state) benchmark::DoNotOptimize(sfs_homeomorphic(d1, d2));
}
BENCHMARK(BM_SfsHomeomorphic);

void BM_TtkDecide(benchmark::State& state) {
    TtkParams params{2, 3, 5};
    for (auto _ : state) {
        auto rec = decide_surgery(make_record(params));
        benchmark::DoNotOptimize(rec);
    }
}
BENCHMARK(BM_TtkDecide);

void BM_TangleKnotDecide(benchmark::State& state) {
    TangleKnotParams params{TangleCase::Case1, 2, 4, 7, SlopeTag::Gamma1};
    for (auto _ : state) {
        auto rec = decide_surgery(make_record(params));
        benchmark::DoNotOptimize(rec);
    }
}
BENCHMARK(BM_TangleKnotDecide);

void BM_EnumerateTangleKnots(benchmark::State& state) {
    TangleKnotSweep sweep{TangleCase::Case1,
                          IntRange{2, 2 + state.range(0)},
                          IntRange{2, 6},
                          IntRange{2, 6},
                          {SlopeTag::Gamma0, SlopeTag::Gamma1}};
    for (auto _ : state) {
        std::size_t count = 0;
        auto summary = enumerate_tangle_knots(sweep, [&](const SurgeryRecord&) { ++count; });
        benchmark::DoNotOptimize(summary);
        benchmark::DoNotOptimize(count);
    }
}
BENCHMARK(BM_EnumerateTangleKnots)->Arg(1)->Arg(4)->Arg(16);

}  // namespace
