#include <benchmark/benchmark.h>

#include <trunclog/bpoly.hpp>
#include <trunclog/glog.hpp>
#include <trunclog/special.hpp>
#include <trunclog/verify.hpp>

#include <random>

using namespace trunclog;

namespace {

FpPoly random_poly(Prime p, std::size_t n, std::mt19937& rng) {
    std::uniform_int_distribution<u32> d(0, p.value() - 1);
    std::vector<u32> c(n);
    for (auto& v : c) v = d(rng);
    c.back() = 1;
    return FpPoly(p, c);
}

void BM_PolyMultiply(benchmark::State& state) {
    const Prime p(65521);
    std::mt19937 rng(1);
    const auto n = static_cast<std::size_t>(state.range(0));
    const FpPoly a = random_poly(p, n, rng), b = random_poly(p, n, rng);
    for (auto _ : state) benchmark::DoNotOptimize(a * b);
    state.SetComplexityN(state.range(0));
}
BENCHMARK(BM_PolyMultiply)->RangeMultiplier(4)->Range(16, 4096)->Complexity();

void BM_PolyGcd(benchmark::State& state) {
    const Prime p(65521);
    std::mt19937 rng(2);
    const auto n = static_cast<std::size_t>(state.range(0));
    const FpPoly common = random_poly(p, n / 2, rng);
    const FpPoly a = common * random_poly(p, n / 2, rng), b = common * random_poly(p, n / 2, rng);
    for (auto _ : state) benchmark::DoNotOptimize(gcd(a, b));
}
BENCHMARK(BM_PolyGcd)->RangeMultiplier(4)->Range(16, 1024);

void BM_BOneUncached(benchmark::State& state) {
    const Prime p(static_cast<u32>(state.range(0)));
    for (auto _ : state)
        for (u32 s = 1; s + 2 <= p.value(); ++s) benchmark::DoNotOptimize(b_rs(BPolyKey(p, 1, s)));
}
BENCHMARK(BM_BOneUncached)->Arg(13)->Arg(31)->Arg(61);

void BM_GLogConstruction(benchmark::State& state) {
    const Prime p(static_cast<u32>(state.range(0)));
    for (auto _ : state) benchmark::DoNotOptimize(glog(p, SelfCheck::off));
}
BENCHMARK(BM_GLogConstruction)->Arg(7)->Arg(13)->Arg(31);

void BM_LeftInverseComposition(benchmark::State& state) {
    const Prime p(static_cast<u32>(state.range(0)));
    const GLog g = glog(p, SelfCheck::off);
    const XPoly l = laguerre_pm1(p);
    for (auto _ : state) benchmark::DoNotOptimize(glog_left_composite(g, l));
}
BENCHMARK(BM_LeftInverseComposition)->Arg(7)->Arg(13)->Arg(19)->Unit(benchmark::kMillisecond);

void BM_VerifyAll(benchmark::State& state) {
    const Prime p(static_cast<u32>(state.range(0)));
    for (auto _ : state) benchmark::DoNotOptimize(verify_all(p));
}
BENCHMARK(BM_VerifyAll)->Arg(5)->Arg(7)->Arg(13)->Unit(benchmark::kMillisecond);

}  // namespace

BENCHMARK_MAIN();
