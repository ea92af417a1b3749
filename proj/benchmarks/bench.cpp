// Microbenchmarks for the hot paths: both bracket engines across diagram
// sizes, cabled brackets, Laurent multiplication, state-graph statistics,
// and full colored Jones evaluations.
#include <benchmark/benchmark.h>

#include <fstream>
#include <random>
#include <sstream>
#include <string>
#include <vector>

#include "knotcab/bracket.hpp"
#include "knotcab/laurent.hpp"
#include "knotcab/pd.hpp"
#include "knotcab/stategraph.hpp"

using namespace knotcab;

namespace {

const std::vector<PDCode>& fixture_knots() {
    static const std::vector<PDCode> knots = [] {
        std::ifstream in(std::string(KNOTCAB_FIXTURES_DIR) + "/knots.pd",
                         std::ios::binary);
        std::ostringstream ss;
        ss << in.rdbuf();
        return parse_pd_file(ss.str());
    }();
    return knots;
}

const PDCode& knot(const std::string& name) {
    for (const auto& d : fixture_knots())
        if (d.name() == name) return d;
    throw Error("no fixture named " + name);
}

LaurentPoly random_poly(std::size_t terms, std::uint32_t seed) {
    std::mt19937 rng(seed);
    std::uniform_int_distribution<int> exp(-int(terms), int(terms));
    std::uniform_int_distribution<int> coeff(-9, 9);
    std::vector<LaurentPoly::Term> t;
    t.reserve(terms);
    for (std::size_t i = 0; i < terms; ++i)
        t.push_back({exp(rng), Int(coeff(rng))});
    return LaurentPoly::from_terms(std::move(t));
}

} // namespace

static void BM_BracketNaive(benchmark::State& state,
                            const std::string& name) {
    const PDCode& d = knot(name);
    for (auto _ : state)
        benchmark::DoNotOptimize(bracket_naive(d).poly);
}
BENCHMARK_CAPTURE(BM_BracketNaive, 3_1, std::string("3_1"));
BENCHMARK_CAPTURE(BM_BracketNaive, 6_2, std::string("6_2"));
BENCHMARK_CAPTURE(BM_BracketNaive, 12a217, std::string("12a217"));

static void BM_BracketFrontier(benchmark::State& state,
                               const std::string& name) {
    const PDCode& d = knot(name);
    for (auto _ : state)
        benchmark::DoNotOptimize(bracket_frontier(d).poly);
}
BENCHMARK_CAPTURE(BM_BracketFrontier, 3_1, std::string("3_1"));
BENCHMARK_CAPTURE(BM_BracketFrontier, 6_2, std::string("6_2"));
BENCHMARK_CAPTURE(BM_BracketFrontier, 12a217, std::string("12a217"));

// Frontier engine on parallel cables, the workload colored Jones evaluation
// is made of.  state.range(0) is the number of parallel strands.
static void BM_BracketCableFrontier(benchmark::State& state) {
    const PDCode c = cable(knot("3_1"), unsigned(state.range(0)));
    for (auto _ : state)
        benchmark::DoNotOptimize(bracket_frontier(c).poly);
}
BENCHMARK(BM_BracketCableFrontier)->Arg(2)->Arg(3)->Arg(4)
    ->Unit(benchmark::kMillisecond);

static void BM_LaurentMul(benchmark::State& state) {
    const auto terms = std::size_t(state.range(0));
    const LaurentPoly p = random_poly(terms, 17);
    const LaurentPoly q = random_poly(terms, 23);
    for (auto _ : state)
        benchmark::DoNotOptimize(p * q);
}
BENCHMARK(BM_LaurentMul)->Arg(64)->Arg(256)->Arg(1024);

static void BM_StateGraphStats(benchmark::State& state,
                               const std::string& name) {
    const PDCode& d = knot(name);
    for (auto _ : state) {
        benchmark::DoNotOptimize(stats(d, Splice::A));
        benchmark::DoNotOptimize(stats(d, Splice::B));
    }
}
BENCHMARK_CAPTURE(BM_StateGraphStats, 12a217, std::string("12a217"));

static void BM_CableStats(benchmark::State& state) {
    const PDCode c = cable(knot("4_1"), unsigned(state.range(0)));
    for (auto _ : state)
        benchmark::DoNotOptimize(stats(c, Splice::A));
}
BENCHMARK(BM_CableStats)->Arg(2)->Arg(3)->Arg(4);

// Full colored Jones evaluation; state.range(0) is the color n.
static void BM_ColoredJones(benchmark::State& state,
                            const std::string& name) {
    const PDCode& d = knot(name);
    const unsigned n = unsigned(state.range(0));
    for (auto _ : state)
        benchmark::DoNotOptimize(colored_jones(d, n).normalized);
}
BENCHMARK_CAPTURE(BM_ColoredJones, 4_1, std::string("4_1"))
    ->Arg(2)->Arg(3)->Arg(4)->Unit(benchmark::kMillisecond);

BENCHMARK_MAIN();
