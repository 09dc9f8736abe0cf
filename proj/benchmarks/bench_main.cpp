#include "satake/characters.hpp"
#include "satake/deodhar.hpp"
#include "satake/galleries.hpp"
#include "satake/hecke.hpp"
#include "satake/lattice_oracle.hpp"
#include "satake/mvcells.hpp"

#include <benchmark/benchmark.h>

using namespace satake;

static void BM_WeylCharacter(benchmark::State& state) {
  const RootDatum g = RootDatum::preset("G2");
  const Coweight mu{state.range(0), 2 * state.range(0)};
  for (auto _ : state) benchmark::DoNotOptimize(weyl_character(g, mu));
}
BENCHMARK(BM_WeylCharacter)->Arg(1)->Arg(2)->Arg(4);

static void BM_GalleryEnumeration(benchmark::State& state) {
  const RootDatum g = RootDatum::preset("SL3");
  const Coweight mu{state.range(0), state.range(0)};
  for (auto _ : state) {
    const DatumGalleries dg(g, mu);
    std::size_t n = 0;
    dg.components()[0].enumerate([&](const CombinatorialGallery&) { return ++n, true; });
    benchmark::DoNotOptimize(n);
  }
}
BENCHMARK(BM_GalleryEnumeration)->Arg(1)->Arg(2)->Arg(3);

// uncached: a fresh seed each iteration defeats the memo
static void BM_MvCells(benchmark::State& state) {
  const RootDatum g = RootDatum::preset("Sp4");
  const Coweight mu{state.range(0), state.range(0)};
  int seed = 1000;
  for (auto _ : state) benchmark::DoNotOptimize(mv_cells_all(g, mu, ++seed));
}
BENCHMARK(BM_MvCells)->Arg(1)->Arg(2)->Arg(3)->Unit(benchmark::kMillisecond);

static void BM_DeodharCells(benchmark::State& state) {
  const RootDatum g = RootDatum::preset("G2");
  const auto& w = g.weyl();
  for (auto _ : state)
    for (FiniteCoxeterGroup::Elem x = 0; x < w.size(); ++x)
      benchmark::DoNotOptimize(deodhar_cells(w, w.word(w.longest()), x));
}
BENCHMARK(BM_DeodharCells);

static void BM_HeckeMultiply(benchmark::State& state) {
  const RootDatum g = RootDatum::preset("SL3");
  const HeckeElement a = HeckeElement::basis({state.range(0), state.range(0)});
  for (auto _ : state) benchmark::DoNotOptimize(hecke_multiply(g, a, a));
}
BENCHMARK(BM_HeckeMultiply)->Arg(1)->Arg(2)->Arg(3);

static void BM_LatticeConvolution(benchmark::State& state) {
  const LatticeOracle oracle(LatticeGroup::PGL2, static_cast<int>(state.range(0)));
  for (auto _ : state) benchmark::DoNotOptimize(oracle.convolution_counts({2}, {2}));
}
BENCHMARK(BM_LatticeConvolution)->Arg(2)->Arg(3)->Arg(5)->Unit(benchmark::kMillisecond);

BENCHMARK_MAIN();
