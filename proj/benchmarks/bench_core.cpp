#include <benchmark/benchmark.h>

#include "wrec/density.hpp"
#include "wrec/regex.hpp"

using namespace wrec;

namespace {

const Alphabet& sigma() {
    static const Alphabet a("ab");
    return a;
}

LanguageAutomaton compiled(const char* text) { return compile_regex(parse_regex(text, sigma()), sigma()); }

// Words whose third letter from the end is a: the subset construction blows
// up exponentially in the distance.
std::string nth_from_end(std::size_t k) {
    std::string r = "(a|b)*a";
    for (std::size_t i = 1; i < k; ++i) r += "(a|b)";
    return r;
}

} // namespace

static void BM_CrossSection(benchmark::State& state) {
    const auto a = compiled("(ab*a)*");
    const auto n = static_cast<std::size_t>(state.range(0));
    for (auto _ : state) benchmark::DoNotOptimize(cross_section(a, n));
    state.counters["words"] = static_cast<double>(cross_section(a, n).words.size());
}
BENCHMARK(BM_CrossSection)->Arg(8)->Arg(16)->Arg(20);

static void BM_DensityStep(benchmark::State& state) {
    const auto a = determinize(compiled("(ab*a)*"));
    const auto n = static_cast<std::size_t>(state.range(0));
    for (auto _ : state) benchmark::DoNotOptimize(density_prefix(a, n, DensityMethod::Step).back());
}
BENCHMARK(BM_DensityStep)->Arg(64)->Arg(1024)->Arg(8192);

static void BM_DensityMatrixPower(benchmark::State& state) {
    const auto a = determinize(compiled("(ab*a)*"));
    const auto n = static_cast<std::size_t>(state.range(0));
    for (auto _ : state) benchmark::DoNotOptimize(density(a, n));
}
BENCHMARK(BM_DensityMatrixPower)->Arg(64)->Arg(1024)->Arg(8192);

static void BM_Determinize(benchmark::State& state) {
    const auto a = compiled(nth_from_end(static_cast<std::size_t>(state.range(0))).c_str());
    for (auto _ : state) benchmark::DoNotOptimize(determinize(a));
    state.counters["states"] = static_cast<double>(determinize(a).size());
}
BENCHMARK(BM_Determinize)->DenseRange(2, 10, 2);

static void BM_Compile(benchmark::State& state) {
    std::string text = "(ab*a)*";
    for (int i = 1; i < state.range(0); ++i) text = "(" + text + "|b(" + text + ")*)";
    const auto r = parse_regex(text, sigma());
    for (auto _ : state) benchmark::DoNotOptimize(compile_regex(r, sigma()));
    state.counters["states"] = static_cast<double>(compile_regex(r, sigma()).size());
}
BENCHMARK(BM_Compile)->DenseRange(1, 4);
BENCHMARK_MAIN();
