// Serial reference vs OpenMP kernels on a clustered synthetic graph. Each pair
// shares a fixture so the only difference is the implementation.

#include <benchmark/benchmark.h>

#include <map>

#include "motifgen/motif_census.hpp"
#include "motifgen/walk_engine.hpp"
#include "motifgen/walk_model.hpp"
#include "support/support.hpp"

namespace {

using namespace motifgen;

const Graph& graph(std::int64_t n) {
  static std::map<std::int64_t, Graph> cache;
  auto it = cache.find(n);
  if (it == cache.end()) it = cache.emplace(n, testing::holme_kim(static_cast<std::size_t>(n), 5, 0.6, 1)).first;
  return it->second;
}

struct WalkFixture {
  const Graph& g;
  BiasedWeights w;
  WalkConfig cfg;
  WalkSet walks;
  MarkovWalkModel model;

  explicit WalkFixture(std::int64_t n)
      : g(graph(n)),
        w(motif_biased_weights(edge_participation(g), census3(g), BiasKind::toward_t)),
        walks(sample_walks(g, w, cfg, g.edge_count() / 4, 1)),
        model(MarkovWalkModel::fit(walks, g, 0.1)) {}
};

template <auto Fn>
void census_kernel(benchmark::State& state) {
  const auto& g = graph(state.range(0));
  for (auto _ : state) benchmark::DoNotOptimize(Fn(g));
  state.counters["edges"] = static_cast<double>(g.edge_count());
}

template <auto Fn>
void walk_kernel(benchmark::State& state) {
  WalkFixture f(state.range(0));
  for (auto _ : state) benchmark::DoNotOptimize(Fn(f.g, f.w, f.cfg, 20000, 3));
  state.SetItemsProcessed(state.iterations() * 20000 * static_cast<std::int64_t>(f.cfg.walk_length));
}

template <auto Fn>
void generate_kernel(benchmark::State& state) {
  WalkFixture f(state.range(0));
  for (auto _ : state) benchmark::DoNotOptimize(Fn(f.model, 20000, f.cfg.walk_length, 3));
  state.SetItemsProcessed(state.iterations() * 20000 * static_cast<std::int64_t>(f.cfg.walk_length));
}

template <auto Fn>
void score_kernel(benchmark::State& state) {
  WalkFixture f(state.range(0));
  for (auto _ : state) benchmark::DoNotOptimize(Fn(f.walks, f.g.node_count()));
}

MotifCensus census_omp(const Graph& g) { return motifgen::census3(g); }
MotifCensus census_ser(const Graph& g) { return motifgen::serial::census3(g); }
EdgeMotifCounts part_omp(const Graph& g) { return motifgen::edge_participation(g); }
EdgeMotifCounts part_ser(const Graph& g) { return motifgen::serial::edge_participation(g); }
Count c4_omp(const Graph& g) { return motifgen::count_four_cycles(g); }
Count c4_ser(const Graph& g) { return motifgen::serial::count_four_cycles(g); }

WalkSet walks_omp(const Graph& g, const BiasedWeights& w, const WalkConfig& c, std::size_t k, std::uint64_t s) {
  return motifgen::sample_walks(g, w, c, k, s);
}
WalkSet walks_ser(const Graph& g, const BiasedWeights& w, const WalkConfig& c, std::size_t k, std::uint64_t s) {
  return motifgen::serial::sample_walks(g, w, c, k, s);
}
WalkSet gen_omp(const MarkovWalkModel& m, std::size_t k, std::size_t l, std::uint64_t s) {
  return motifgen::generate_walks(m, k, l, s);
}
WalkSet gen_ser(const MarkovWalkModel& m, std::size_t k, std::size_t l, std::uint64_t s) {
  return motifgen::serial::generate_walks(m, k, l, s);
}
ScoreMatrix score_omp(const WalkSet& w, std::size_t n) { return motifgen::score_matrix(w, n); }
ScoreMatrix score_ser(const WalkSet& w, std::size_t n) { return motifgen::serial::score_matrix(w, n); }

#define PAIR(name, kernel, omp, ser)                                                           \
  BENCHMARK(kernel<omp>)->Name(name "/openmp")->Arg(2000)->Arg(20000)->Unit(benchmark::kMillisecond); \
  BENCHMARK(kernel<ser>)->Name(name "/serial")->Arg(2000)->Arg(20000)->Unit(benchmark::kMillisecond)

PAIR("census3", census_kernel, census_omp, census_ser);
PAIR("edge_participation", census_kernel, part_omp, part_ser);
PAIR("four_cycles", census_kernel, c4_omp, c4_ser);
PAIR("sample_walks", walk_kernel, walks_omp, walks_ser);
PAIR("generate_walks", generate_kernel, gen_omp, gen_ser);
PAIR("score_matrix", score_kernel, score_omp, score_ser);

}  // namespace

BENCHMARK_MAIN();
