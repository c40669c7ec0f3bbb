#include <benchmark/benchmark.h>

#include "ringlab/criteria.hpp"
#include "ringlab/report.hpp"

namespace {

using namespace ringlab;

void BM_GlEnumerate(benchmark::State& state) {
    auto F = Field::gf(3, 1);
    for (auto _ : state) {
        auto units = gl_enumerate(2, F);
        benchmark::DoNotOptimize(units.data());
    }
}
BENCHMARK(BM_GlEnumerate);

void BM_BuildTriRing(benchmark::State& state) {
    auto spec = parse_spec("tri(gf(2);2;companion[1,1,1])");
    for (auto _ : state) {
        auto ring = build_ring(spec);
        benchmark::DoNotOptimize(ring.get());
    }
}
BENCHMARK(BM_BuildTriRing);

void BM_RegularLattice(benchmark::State& state) {
    auto ring = build_ring(parse_spec("trimat(zmod(4),zmod(2))"));
    for (auto _ : state) {
        auto fresh = realize_regular(ring);  // avoid the cache
        const auto& lat = enumerate_submodules(*fresh);
        benchmark::DoNotOptimize(lat.data());
    }
}
BENCHMARK(BM_RegularLattice);

void BM_ClassifyZmod8(benchmark::State& state) {
    auto ring = build_ring(parse_spec("zmod(8)"));
    for (auto _ : state) {
        RingCtx ctx(ring);
        auto rc = classify_ring_no_middle_class(ctx);
        benchmark::DoNotOptimize(&rc);
    }
}
BENCHMARK(BM_ClassifyZmod8);

void BM_RowSpanAllConjugates(benchmark::State& state) {
    auto ring = build_ring(parse_spec("tri(gf(3);2;gen[[1,2],[1,1]])"));
    const TriInfo& t = *ring->tri;
    for (auto _ : state) {
        auto v = row_span_criterion(t.D, t.n, t.dprime, SpanMode::AllConjugates);
        benchmark::DoNotOptimize(&v);
    }
}
BENCHMARK(BM_RowSpanAllConjugates);

}  // namespace

BENCHMARK_MAIN();
