#include <benchmark/benchmark.h>

#include <cmath>
#include <fstream>
#include <memory>
#include <sstream>
#include <string>

#include "treg/elliptic/flat_norm.hpp"
#include "treg/milnor/tame.hpp"
#include "treg/quad/monte_carlo.hpp"
#include "treg/quad/quadrature.hpp"
#include "treg/quad/surjectivity.hpp"
#include "treg/report/corpus.hpp"

using namespace treg;

namespace {

std::string slurp(const std::string& name) {
    std::ifstream in(std::string(TREG_CORPUS_DIR) + "/" + name, std::ios::binary);
    std::ostringstream os;
    os << in.rdbuf();
    return os.str();
}

const report::Corpus& p1xp1() {
    static const report::Corpus c = report::parse_corpus(slurp("p1xp1.json"));
    return c;
}

const report::Corpus& elliptic_corpus() {
    static const report::Corpus c = report::parse_corpus(slurp("elliptic.json"));
    return c;
}

void BM_CorpusParse(benchmark::State& state) {
    const std::string text = slurp("elliptic.json");
    for (auto _ : state) benchmark::DoNotOptimize(report::parse_corpus(text));
    state.SetBytesProcessed(static_cast<std::int64_t>(state.iterations() * text.size()));
}
BENCHMARK(BM_CorpusParse)->Unit(benchmark::kMillisecond);

void BM_TameSymbol(benchmark::State& state) {
    const auto& c = p1xp1();
    for (auto _ : state) benchmark::DoNotOptimize(milnor::tame_symbol(c.registry, c.tame.front().symbol));
}
BENCHMARK(BM_TameSymbol)->Unit(benchmark::kMicrosecond);

void BM_BoundarySquared(benchmark::State& state) {
    const auto& c = elliptic_corpus();
    for (auto _ : state)
        for (const auto& b : c.boundary_squared) benchmark::DoNotOptimize(milnor::boundary_squared(c.registry, b.symbol));
    state.SetItemsProcessed(static_cast<std::int64_t>(state.iterations() * c.boundary_squared.size()));
}
BENCHMARK(BM_BoundarySquared)->Unit(benchmark::kMillisecond);

void BM_WeilReciprocity(benchmark::State& state) {
    const auto& c = elliptic_corpus();
    for (auto _ : state)
        for (const auto& r : c.reciprocity) benchmark::DoNotOptimize(milnor::weil_reciprocity(c.registry, r.curve, r.f, r.g));
    state.SetItemsProcessed(static_cast<std::int64_t>(state.iterations() * c.reciprocity.size()));
}
BENCHMARK(BM_WeilReciprocity)->Unit(benchmark::kMillisecond);

void BM_FlatNormEval(benchmark::State& state) {
    const auto& h = elliptic_corpus().harmonicity.front();
    auto engine = std::make_shared<elliptic::WeierstrassEngine>(h.lattice, static_cast<int>(state.range(0)));
    elliptic::FlatNormField field(engine, h.divisor);
    const elliptic::cplx z = 0.3 * h.lattice.w1 + 0.7 * h.lattice.w2;
    for (auto _ : state) benchmark::DoNotOptimize(field(z));
}
BENCHMARK(BM_FlatNormEval)->Arg(10)->Arg(20)->Arg(40);

void BM_IntegrateDiagonal(benchmark::State& state) {
    const auto g = quad::theorem_integrand(1, 1);
    const double tol = std::pow(10.0, -static_cast<double>(state.range(0)));
    for (auto _ : state) benchmark::DoNotOptimize(quad::integrate_c(g, tol));
}
BENCHMARK(BM_IntegrateDiagonal)->DenseRange(6, 10, 2)->Unit(benchmark::kMillisecond);

void BM_MonteCarlo(benchmark::State& state) {
    const auto g = quad::theorem_integrand(1, 1);
    const auto n = static_cast<std::uint64_t>(state.range(0));
    for (auto _ : state) benchmark::DoNotOptimize(quad::mc_oracle(g, 1, n));
    state.SetItemsProcessed(static_cast<std::int64_t>(state.iterations() * n));
}
BENCHMARK(BM_MonteCarlo)->Arg(10000)->Arg(200000)->Unit(benchmark::kMillisecond);

void BM_Surjectivity(benchmark::State& state) {
    for (auto _ : state) benchmark::DoNotOptimize(quad::surjectivity_report());
}
BENCHMARK(BM_Surjectivity)->Unit(benchmark::kMillisecond);

}  // namespace

BENCHMARK_MAIN();
