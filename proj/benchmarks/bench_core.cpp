#include <benchmark/benchmark.h>

#include <random>

#include "toroidal/construct.hpp"
#include "toroidal/limit_group.hpp"

using namespace toroidal;

namespace {

std::vector<SequenceSpec> periodic_corpus(std::size_t count) {
    std::mt19937_64 rng(42);
    std::vector<SequenceSpec> out;
    for (std::size_t i = 0; i < count; ++i) {
        std::vector<FactoredNat> pre, cycle;
        for (std::size_t j = 0; j < rng() % 4; ++j)
            pre.push_back(FactoredNat::from_value(rng() % 64));
        for (std::size_t j = 0; j < 1 + rng() % 5; ++j)
            cycle.push_back(FactoredNat::from_value(1 + rng() % 63));
        out.push_back(SequenceSpec::periodic(pre, cycle));
    }
    return out;
}

void BM_factor_word(benchmark::State& state) {
    std::mt19937_64 rng(7);
    for (auto _ : state) {
        benchmark::DoNotOptimize(FactoredNat::from_value(rng() % 10000000));
    }
}
BENCHMARK(BM_factor_word);

void BM_classify_periodic(benchmark::State& state) {
    auto corpus = periodic_corpus(256);
    std::size_t i = 0;
    for (auto _ : state) {
        benchmark::DoNotOptimize(classify(corpus[i++ % corpus.size()]));
    }
}
BENCHMARK(BM_classify_periodic);

void BM_isomorphism(benchmark::State& state) {
    auto corpus = periodic_corpus(64);
    std::size_t i = 0;
    for (auto _ : state) {
        const auto& a = corpus[i % corpus.size()];
        const auto& b = corpus[(i * 7 + 3) % corpus.size()];
        benchmark::DoNotOptimize(isomorphic(a, b));
        ++i;
    }
}
BENCHMARK(BM_isomorphism);

void BM_construct_roundtrip(benchmark::State& state) {
    RealizationRequest req;
    req.target_h = SequenceSpec::periodic({}, {FactoredNat::from_value(2), FactoredNat::from_value(3)});
    req.target_n = SequenceSpec::periodic({}, {FactoredNat::from_value(6), FactoredNat::from_value(10)});
    for (auto _ : state) {
        RealizationResult r = construct_unknotted(req);
        benchmark::DoNotOptimize(verify_roundtrip(r, req));
    }
}
BENCHMARK(BM_construct_roundtrip);

void BM_classify_set_fixture(benchmark::State& state) {
    auto fixtures = fixture_families();
    std::size_t i = 0;
    for (auto _ : state) {
        benchmark::DoNotOptimize(classify_set(fixtures[i++ % fixtures.size()].second));
    }
}
BENCHMARK(BM_classify_set_fixture);

}  // namespace

BENCHMARK_MAIN();
