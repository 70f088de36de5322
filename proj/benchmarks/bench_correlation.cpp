#include "mocs/constructions.hpp"
#include "mocs/correlation.hpp"
#include "mocs/enumeration.hpp"
#include "mocs/verification.hpp"

#include <benchmark/benchmark.h>

#include <random>

using namespace mocs;

namespace {

QarySequence random_sequence(std::mt19937& rng, Symbol q, std::size_t L) {
    std::vector<Symbol> v(L);
    for (auto& s : v) s = static_cast<Symbol>(rng() % q);
    return QarySequence(q, std::move(v));
}

void BM_DirectCorrelationAllShifts(benchmark::State& state) {
    std::mt19937 rng(1);
    const auto q = static_cast<Symbol>(state.range(0));
    const auto L = static_cast<std::size_t>(state.range(1));
    const auto c = random_sequence(rng, q, L), d = random_sequence(rng, q, L);
    for (auto _ : state) {
        for (std::size_t u = 0; u < L; ++u) benchmark::DoNotOptimize(cross_correlation(c, d, static_cast<long>(u)));
    }
    state.SetItemsProcessed(state.iterations() * static_cast<long>(L * (L + 1) / 2));
}

void BM_PackedCorrelationAllShifts(benchmark::State& state) {
    std::mt19937 rng(1);
    const auto q = static_cast<Symbol>(state.range(0));
    const auto L = static_cast<std::size_t>(state.range(1));
    const PackedSequence c(random_sequence(rng, q, L)), d(random_sequence(rng, q, L));
    for (auto _ : state) {
        for (std::size_t u = 0; u < L; ++u) benchmark::DoNotOptimize(packed_cross_correlation(c, d, static_cast<long>(u)));
    }
    state.SetItemsProcessed(state.iterations() * static_cast<long>(L * (L + 1) / 2));
}

void BM_ExactZeroTest(benchmark::State& state) {
    const auto q = static_cast<Symbol>(state.range(0));
    const ZeroTester tester(q);
    std::mt19937 rng(2);
    std::vector<CorrelationValue> values;
    for (int i = 0; i < 256; ++i) {
        std::vector<std::uint64_t> counts(q);
        for (auto& c : counts) c = rng() % 64;
        values.emplace_back(q, std::move(counts));
    }
    for (auto _ : state) {
        for (const auto& v : values) benchmark::DoNotOptimize(tester.exact_zero(v));
    }
    state.SetItemsProcessed(state.iterations() * 256);
}

void BM_VerifyCorollaryFamily(benchmark::State& state) {
    // q = 4, parts {1},{2},...,{m-1}, t = m-1: set size 2^(m-1), flock 2^m, length 2^m.
    const auto m = static_cast<unsigned>(state.range(0));
    std::vector<std::vector<unsigned>> parts;
    for (unsigned v = 1; v < m; ++v) parts.push_back({v});
    const MocsFamily family = build_mocs_corollary1(4, PartitionPlan(m, parts, m - 1));
    for (auto _ : state) benchmark::DoNotOptimize(verify_mocs(family).passed);
}

void BM_EnumerateTableTwo(benchmark::State& state) {
    for (auto _ : state) benchmark::DoNotOptimize(enumerate_existence(2, static_cast<unsigned>(state.range(0)), 40).size());
}

} // namespace

BENCHMARK(BM_DirectCorrelationAllShifts)->Args({4, 48})->Args({4, 256})->Args({8, 256});
BENCHMARK(BM_PackedCorrelationAllShifts)->Args({4, 48})->Args({4, 256})->Args({8, 256});
BENCHMARK(BM_ExactZeroTest)->Arg(4)->Arg(12)->Arg(64);
BENCHMARK(BM_VerifyCorollaryFamily)->DenseRange(4, 7)->Unit(benchmark::kMillisecond);
BENCHMARK(BM_EnumerateTableTwo)->Arg(6)->Unit(benchmark::kMillisecond);
BENCHMARK_MAIN();
