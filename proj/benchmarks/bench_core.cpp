#include <benchmark/benchmark.h>

#include <vector>

#include "vernon/decompose.hpp"
#include "vernon/generate.hpp"
#include "vernon/monad.hpp"
#include "vernon/translate.hpp"

using namespace vernon;

namespace {

std::vector<VernonGraph> trees(std::size_t corollas, std::size_t count) {
    Generator gen(corollas * 7919);
    std::vector<VernonGraph> out;
    for (std::size_t i = 0; i < count; ++i) out.push_back(gen.ordinary_tree(corollas));
    return out;
}

std::vector<MuCommand> commands(std::uint64_t seed, std::size_t corollas, std::size_t count) {
    Generator gen(seed);
    std::vector<MuCommand> out;
    for (std::size_t i = 0; i < count; ++i) out.push_back(gen.command(gen.ordinary_tree(corollas)));
    return out;
}

void BM_Canonicalize(benchmark::State& state) {
    const auto ts = trees(static_cast<std::size_t>(state.range(0)), 64);
    std::size_t i = 0;
    for (auto _ : state) benchmark::DoNotOptimize(canonicalize(ts[i++ % ts.size()]));
}
BENCHMARK(BM_Canonicalize)->DenseRange(1, 9, 2);

void BM_NormalForm(benchmark::State& state) {
    Generator gen(17);
    std::vector<VernonGraph> gs;
    for (int i = 0; i < 64; ++i) gs.push_back(gen.extended_tree(4, static_cast<std::size_t>(state.range(0))));
    std::size_t i = 0;
    for (auto _ : state) benchmark::DoNotOptimize(normal_form(gs[i++ % gs.size()]));
}
BENCHMARK(BM_NormalForm)->Arg(1)->Arg(4)->Arg(8)->Arg(16);

void BM_Flatten(benchmark::State& state) {
    Generator gen(19);
    std::vector<VernonGraph> gs;
    for (int i = 0; i < 32; ++i) gs.push_back(gen.two_level(static_cast<std::size_t>(state.range(0)), 3, 0.2));
    std::size_t i = 0;
    for (auto _ : state) benchmark::DoNotOptimize(mu(gs[i++ % gs.size()]));
}
BENCHMARK(BM_Flatten)->Arg(2)->Arg(5);

void BM_Phi(benchmark::State& state) {
    const auto cs = commands(23, static_cast<std::size_t>(state.range(0)), 32);
    std::size_t i = 0;
    for (auto _ : state) benchmark::DoNotOptimize(phi(cs[i++ % cs.size()]));
}
BENCHMARK(BM_Phi)->DenseRange(1, 7, 2);

void BM_PhiDirect(benchmark::State& state) {
    const auto cs = commands(23, static_cast<std::size_t>(state.range(0)), 32);
    std::size_t i = 0;
    for (auto _ : state) benchmark::DoNotOptimize(phi_direct(cs[i++ % cs.size()]));
}
BENCHMARK(BM_PhiDirect)->DenseRange(1, 7, 2);

void BM_MuNormalForm(benchmark::State& state) {
    const auto cs = commands(29, static_cast<std::size_t>(state.range(0)), 32);
    std::size_t i = 0;
    for (auto _ : state) benchmark::DoNotOptimize(mu_normal_form(cs[i++ % cs.size()]));
}
BENCHMARK(BM_MuNormalForm)->DenseRange(1, 7, 2);

void BM_CommandOf(benchmark::State& state) {
    const auto ts = trees(static_cast<std::size_t>(state.range(0)), 32);
    std::size_t i = 0;
    for (auto _ : state) benchmark::DoNotOptimize(command_of(ts[i++ % ts.size()], 0));
}
BENCHMARK(BM_CommandOf)->DenseRange(1, 9, 2);

}  // namespace

BENCHMARK_MAIN();
