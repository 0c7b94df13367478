#include <benchmark/benchmark.h>

#include "ortholat/canonical.hpp"
#include "ortholat/census.hpp"
#include "ortholat/fuzzy.hpp"
#include "ortholat/implication.hpp"
#include "ortholat/ortho.hpp"
#include "ortholat/shapes.hpp"

using namespace ortholat;

namespace {

void EnumerateLattices(benchmark::State& state) {
  const int n = static_cast<int>(state.range(0));
  for (auto _ : state) {
    auto classes = enumerate_lattices(n);
    benchmark::DoNotOptimize(classes);
  }
}
BENCHMARK(EnumerateLattices)->DenseRange(5, 8);

void CensusFull(benchmark::State& state) {
  const int n = static_cast<int>(state.range(0));
  for (auto _ : state) {
    auto counts = census(n);
    benchmark::DoNotOptimize(counts);
  }
}
BENCHMARK(CensusFull)->DenseRange(6, 8);

void CanonicalForm8(benchmark::State& state) {
  Poset cube = shapes::boolean_cube(3).poset();
  for (auto _ : state) {
    auto cf = canonical_form(cube);
    benchmark::DoNotOptimize(cf);
  }
}
BENCHMARK(CanonicalForm8);

void ClassifyHexagon(benchmark::State& state) {
  Lattice hex = shapes::o6();
  UnaryMap perp = shapes::o6_perp(hex);
  for (auto _ : state) {
    benchmark::DoNotOptimize(is_modular(hex).modular);
    benchmark::DoNotOptimize(is_distributive(hex).distributive);
    benchmark::DoNotOptimize(classify_ortho(hex, perp).orthomodular);
  }
}
BENCHMARK(ClassifyHexagon);

void OrthoDiscovery(benchmark::State& state) {
  Lattice lat = shapes::mo(3);
  for (auto _ : state) {
    auto maps = find_orthocomplementations(lat);
    benchmark::DoNotOptimize(maps);
  }
}
BENCHMARK(OrthoDiscovery);

void SixImplicationReport(benchmark::State& state) {
  Lattice cube = shapes::boolean_cube(4);
  UnaryMap perp = shapes::cube_complement(cube);
  for (auto _ : state) {
    auto rep = implication_table_report(cube, perp);
    benchmark::DoNotOptimize(rep);
  }
}
BENCHMARK(SixImplicationReport);

void InducedLogicCube(benchmark::State& state) {
  const std::vector<std::string> u{"x1", "x2", "x3"};
  std::vector<MembershipFn> fns;
  const Rat lo(1, 5), hi(3, 5), mid_lo(2, 5), mid_hi(4, 5);
  fns.push_back(make_membership("m0", u, {Rat(0), Rat(0), Rat(0)}));
  fns.push_back(make_membership("mA", u, {hi, lo, lo}));
  fns.push_back(make_membership("mB", u, {lo, hi, lo}));
  fns.push_back(make_membership("mC", u, {lo, lo, hi}));
  fns.push_back(make_membership("mAB", u, {mid_hi, mid_hi, mid_lo}));
  fns.push_back(make_membership("mAC", u, {mid_hi, mid_lo, mid_hi}));
  fns.push_back(make_membership("mBC", u, {mid_lo, mid_hi, mid_hi}));
  fns.push_back(make_membership("m1", u, {Rat(1), Rat(1), Rat(1)}));
  for (auto _ : state) {
    auto logic = induced_logic(fns, GradeNegation{});
    benchmark::DoNotOptimize(logic);
  }
}
BENCHMARK(InducedLogicCube);

void MinmaxOracle(benchmark::State& state) {
  const std::vector<Rat> grid{Rat(0), Rat(1, 2), Rat(1)};
  for (auto _ : state) {
    auto res = minmax_uniqueness_oracle(grid);
    benchmark::DoNotOptimize(res);
  }
}
BENCHMARK(MinmaxOracle);

}  // namespace

BENCHMARK_MAIN();
