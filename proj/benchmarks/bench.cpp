#include <benchmark/benchmark.h>

#include <vector>

#include "valquiv/oracle.hpp"
#include "valquiv/preprojective.hpp"

namespace {

using namespace valquiv;

ValuedGraph kronecker_graph() { return ValuedGraph::validate(2, {{1, 2, 2, 2}}); }

ValuedGraph a4_graph() {
  return ValuedGraph::validate(4, {{1, 2, 1, 1}, {2, 3, 1, 1}, {3, 4, 1, 1}});
}

ValuedGraph d4_graph() {
  return ValuedGraph::validate(4, {{1, 2, 1, 1}, {2, 3, 1, 1}, {2, 4, 1, 1}});
}

Orientation d4_orient(const ValuedGraph& g) {
  return Orientation::from_arrows(g, {{2, 1}, {2, 3}, {2, 4}});
}

void BM_IsReduced(benchmark::State& state) {
  ValuedGraph g = kronecker_graph();
  CartanMatrix a(g);
  Word w;
  for (long i = 0; i < state.range(0); ++i) w.letters.push_back(i % 2 == 0 ? 2 : 1);
  for (auto _ : state) benchmark::DoNotOptimize(is_reduced(a, w));
}
BENCHMARK(BM_IsReduced)->Arg(64)->Arg(256);

void BM_DescentLength(benchmark::State& state) {
  ValuedGraph g = kronecker_graph();
  CartanMatrix a(g);
  Word w;
  for (long i = 0; i < state.range(0); ++i) w.letters.push_back(i % 2 == 0 ? 2 : 1);
  WeylElement e = element_of(a, w);
  long cap = default_length_cap(a.rank(), w.letters.size());
  for (auto _ : state) benchmark::DoNotOptimize(length(a, e, cap));
}
BENCHMARK(BM_DescentLength)->Arg(64)->Arg(256);

void BM_BfsLengths(benchmark::State& state) {
  ValuedGraph g = a4_graph();
  CartanMatrix a(g);
  for (auto _ : state) {
    oracle::CayleyTable t = oracle::bfs_lengths(a, 10000);
    benchmark::DoNotOptimize(t.order);
  }
}
BENCHMARK(BM_BfsLengths);

void BM_EnumerateAdmissible(benchmark::State& state) {
  ValuedGraph g = d4_graph();
  Orientation o = d4_orient(g);
  for (auto _ : state) {
    auto all = oracle::enumerate_admissible(o, static_cast<int>(state.range(0)));
    benchmark::DoNotOptimize(all.size());
  }
}
BENCHMARK(BM_EnumerateAdmissible)->Arg(6)->Arg(8);

void BM_CanonicalForm(benchmark::State& state) {
  ValuedGraph g = d4_graph();
  Orientation o = d4_orient(g);
  AdmissibleSequence s = principal_sequence(o, static_cast<int>(state.range(0)), 1);
  for (auto _ : state) {
    CanonicalForm cf = canonical_form(s);
    benchmark::DoNotOptimize(cf.blocks.size());
  }
}
BENCHMARK(BM_CanonicalForm)->Arg(8)->Arg(32);

void BM_DimOfSequence(benchmark::State& state) {
  ValuedGraph g = kronecker_graph();
  CartanMatrix a(g);
  Orientation o = Orientation::from_arrows(g, {{1, 2}});
  AdmissibleSequence s = principal_sequence(o, static_cast<int>(state.range(0)), 1);
  for (auto _ : state) {
    PositivityTrace t = dim_of_sequence(a, s);
    benchmark::DoNotOptimize(t.positive);
  }
}
BENCHMARK(BM_DimOfSequence)->Arg(50);

void BM_EnumerateClasses(benchmark::State& state) {
  ValuedGraph g = d4_graph();
  Orientation o = d4_orient(g);
  for (auto _ : state) {
    auto all = enumerate_classes(g, o, static_cast<int>(state.range(0)));
    benchmark::DoNotOptimize(all.size());
  }
}
BENCHMARK(BM_EnumerateClasses)->Arg(20);

}  // namespace

BENCHMARK_MAIN();
