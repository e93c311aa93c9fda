// Serial reference against the OpenMP kernels.

#include "linembed/builder.hpp"
#include "linembed/collapse.hpp"
#include "linembed/corpus.hpp"
#include "linembed/rng.hpp"
#include "linembed/tverberg.hpp"
#include "linembed/verify.hpp"

#include <benchmark/benchmark.h>

using namespace linembed;

namespace {

struct VerifyFixture
{
    SimplicialComplex complex;
    EmbeddingMap embedding;
};

const VerifyFixture& vkf_fixture()
{
    static const VerifyFixture f = [] {
        const auto c = gen_vkf_cone(2);
        const auto seq = find_collapse_to_vertex(c);
        return VerifyFixture{c, embed_collapsible(c, *seq.result).embedding};
    }();
    return f;
}

std::vector<Point> tverberg_points(std::size_t n)
{
    Lcg64 rng(1);
    std::vector<Point> pts;
    for (std::size_t i = 0; i < n; ++i)
        pts.push_back(Point{Rational(static_cast<long>(rng.below(1000))), Rational(static_cast<long>(rng.below(1000)))});
    return pts;
}

void BM_VerifySerial(benchmark::State& state)
{
    const auto& f = vkf_fixture();
    for (auto _ : state) benchmark::DoNotOptimize(verify_embedding_serial(f.complex, f.embedding));
}

void BM_VerifyParallel(benchmark::State& state)
{
    const auto& f = vkf_fixture();
    for (auto _ : state) benchmark::DoNotOptimize(verify_embedding(f.complex, f.embedding));
}

void BM_TverbergSerial(benchmark::State& state)
{
    const auto pts = tverberg_points(static_cast<std::size_t>(state.range(0)));
    for (auto _ : state) benchmark::DoNotOptimize(find_tverberg_partition_serial(pts, 3));
}

void BM_TverbergParallel(benchmark::State& state)
{
    const auto pts = tverberg_points(static_cast<std::size_t>(state.range(0)));
    for (auto _ : state) benchmark::DoNotOptimize(find_tverberg_partition(pts, 3));
}

} // namespace

BENCHMARK(BM_VerifySerial)->Unit(benchmark::kMillisecond);
BENCHMARK(BM_VerifyParallel)->Unit(benchmark::kMillisecond);
BENCHMARK(BM_TverbergSerial)->Arg(7)->Arg(9)->Unit(benchmark::kMillisecond);
BENCHMARK(BM_TverbergParallel)->Arg(7)->Arg(9)->Unit(benchmark::kMillisecond);

BENCHMARK_MAIN();
