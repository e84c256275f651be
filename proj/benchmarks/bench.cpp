#include <benchmark/benchmark.h>

#include "constacode/analysis.hpp"
#include "constacode/enumeration.hpp"
#include "constacode/families.hpp"

using namespace constacode;

namespace {

void BM_FieldMultiply(benchmark::State& state) {
    auto F = default_field(3, 4);
    FieldElement x = F->from_log(17), y = F->from_log(55);
    for (auto _ : state) {
        benchmark::DoNotOptimize(x = x * y);
    }
}
BENCHMARK(BM_FieldMultiply);

void BM_FieldAddZech(benchmark::State& state) {
    auto F = default_field(3, 4);
    FieldElement x = F->from_log(17), y = F->from_log(55);
    for (auto _ : state) {
        benchmark::DoNotOptimize(x = x + y);
        if (x.is_zero()) x = y;
    }
}
BENCHMARK(BM_FieldAddZech);

void BM_GeneratorPolynomial(benchmark::State& state) {
    const std::int64_t ell = state.range(0);
    for (auto _ : state) {
        benchmark::DoNotOptimize(cprime(3, 4, 2, ell));
    }
}
BENCHMARK(BM_GeneratorPolynomial)->Arg(1)->Arg(2)->Arg(3);

void BM_EnumerationPacked(benchmark::State& state) {
    // GF(4) codes take the bit-plane path: 4^10 words of length 85
    const ConstacyclicCode c = cfamily(4, 4, 3, 2);
    const GeneratorMatrix G = generator_matrix(c);
    for (auto _ : state) {
        benchmark::DoNotOptimize(enumerate_weights(G, std::int64_t(1) << 26, 1));
    }
    state.SetItemsProcessed(state.iterations() * (std::int64_t(1) << 20));
}
BENCHMARK(BM_EnumerationPacked)->Unit(benchmark::kMillisecond);

void BM_EnumerationGeneric(benchmark::State& state) {
    // GF(3) takes the table-driven path: 3^10 words of length 13
    const ConstacyclicCode c = cfamily(3, 3, 2, 3);
    const GeneratorMatrix G = generator_matrix(c);
    for (auto _ : state) {
        benchmark::DoNotOptimize(enumerate_weights(G, std::int64_t(1) << 26, 1));
    }
    state.SetItemsProcessed(state.iterations() * ipow(3, G.rank()));
}
BENCHMARK(BM_EnumerationGeneric)->Unit(benchmark::kMillisecond);

void BM_Rref(benchmark::State& state) {
    const GeneratorMatrix G = generator_matrix(cprime(3, 4, 2, 2));
    for (auto _ : state) {
        std::vector<Word> rows = G.rows();
        benchmark::DoNotOptimize(rref(std::move(rows), G.tables()));
    }
}
BENCHMARK(BM_Rref);

void BM_BchScan(benchmark::State& state) {
    const ConstacyclicCode c = cfamily(5, 3, 2, 5);
    for (auto _ : state) {
        benchmark::DoNotOptimize(bch_lower_bound(c));
    }
}
BENCHMARK(BM_BchScan);

void BM_MacWilliams(benchmark::State& state) {
    const ConstacyclicCode c = cprime(5, 3, 2, 1);
    const WeightDistribution dual_wd = weight_distribution(dual(c));
    for (auto _ : state) {
        benchmark::DoNotOptimize(macwilliams(dual_wd, 62, 6, 5));
    }
    state.SetLabel("n = 62, exact integers");
}
BENCHMARK(BM_MacWilliams)->Unit(benchmark::kMillisecond);

}  // namespace

BENCHMARK_MAIN();
