#include "graycat/fixtures.hpp"
#include "graycat/sweep.hpp"
#include "graycat/validate.hpp"

#include <benchmark/benchmark.h>

using namespace graycat;

namespace {

CatPtr share(FiniteGrayCategory c) { return std::make_shared<const FiniteGrayCategory>(std::move(c)); }

const FiniteGrayCategory& fixture(int which)
{
    static const FiniteGrayCategory cats[] = {bc_z4(), build_thin_s3(), build_codiscrete_s3()};
    return cats[which];
}

Exec mode(const benchmark::State& s) { return s.range(1) ? Exec::parallel : Exec::serial; }

void BM_validate_category(benchmark::State& state)
{
    const auto& C = fixture(static_cast<int>(state.range(0)));
    state.SetLabel(C.name() + (state.range(1) ? " parallel" : " serial"));
    for (auto _ : state)
        benchmark::DoNotOptimize(validate_gray_category(C, mode(state)));
}
BENCHMARK(BM_validate_category)->ArgsProduct({{0, 1, 2}, {0, 1}})->Unit(benchmark::kMillisecond);

struct Spaces {
    CatPtr w1 = share(build_walking(1));
    CatPtr bc = share(bc_z2());
    MappingSpace GH = build_mapping_space(w1, bc);
    MappingSpace HK = build_mapping_space(bc, bc);
};

const Spaces& spaces()
{
    static const Spaces s;
    return s;
}

void BM_validate_mapping_space(benchmark::State& state)
{
    const auto& M = spaces().GH;
    state.SetLabel(state.range(1) ? "parallel" : "serial");
    for (auto _ : state)
        benchmark::DoNotOptimize(validate_gray_category(*M.space, mode(state)));
}
BENCHMARK(BM_validate_mapping_space)->ArgsProduct({{0}, {0, 1}})->Unit(benchmark::kMillisecond);

void BM_sweep_hcomp_typing(benchmark::State& state)
{
    const auto& s = spaces();
    state.SetLabel(state.range(1) ? "parallel" : "serial");
    for (auto _ : state)
        benchmark::DoNotOptimize(sweep_hcomp_typing(s.GH, s.HK, mode(state)));
}
BENCHMARK(BM_sweep_hcomp_typing)->ArgsProduct({{0}, {0, 1}})->Unit(benchmark::kMillisecond);

void BM_sweep_interchange(benchmark::State& state)
{
    const auto& s = spaces();
    state.SetLabel(state.range(1) ? "parallel" : "serial");
    for (auto _ : state)
        benchmark::DoNotOptimize(sweep_interchange(s.GH, s.HK, mode(state)));
}
BENCHMARK(BM_sweep_interchange)->ArgsProduct({{0}, {0, 1}})->Unit(benchmark::kMillisecond);

} // namespace

BENCHMARK_MAIN();
