#include <benchmark/benchmark.h>

#include <random>

#include "sqk/fixtures.hpp"
#include "sqk/homology.hpp"
#include "sqk/invariants.hpp"

using namespace sqk;

static void BM_SmithNormalForm(benchmark::State& state) {
  const auto n = static_cast<std::size_t>(state.range(0));
  std::mt19937 rng(7);
  std::uniform_int_distribution<int> entry(-9, 9);
  Matrix m(n, std::vector<Integer>(n));
  for (auto& row : m)
    for (auto& v : row) v = entry(rng);
  for (auto _ : state) benchmark::DoNotOptimize(smith_normal_form(m, n, true));
}
BENCHMARK(BM_SmithNormalForm)->Arg(8)->Arg(16)->Arg(32);

static void BM_GoodInvolutions(benchmark::State& state) {
  const auto q = make_dihedral(static_cast<int>(state.range(0)));
  for (auto _ : state) benchmark::DoNotOptimize(enumerate_good_involutions(q));
}
BENCHMARK(BM_GoodInvolutions)->Arg(8)->Arg(10)->Arg(12);

static void BM_Homology(benchmark::State& state) {
  const auto s = fixtures::r4_antipodal().quandle;
  const SymmetricComplex cx(s, XSetAction::quandle_action(s));
  const int n = static_cast<int>(state.range(0));
  for (auto _ : state)
    benchmark::DoNotOptimize(
        homology(cx, ComplexVariant::Qrho, n, CoefficientGroup::integers()));
}
BENCHMARK(BM_Homology)->Arg(1)->Arg(2)->Arg(3);

static void BM_TrefoilColorings(benchmark::State& state) {
  const auto s = fixtures::conj_s3().quandle;
  const auto act = XSetAction::quandle_action(s);
  const Diagram d = Diagram::build(parse_pd("X[1,5,2,4] X[3,1,4,6] X[5,3,6,2]"));
  for (auto _ : state) benchmark::DoNotOptimize(enumerate_colorings(d, s, act));
}
BENCHMARK(BM_TrefoilColorings);

static void BM_TorusLinkInvariant(benchmark::State& state) {
  const auto s = fixtures::trivial_paired(2).quandle;
  const auto pt = XSetAction::singleton(s);
  const Diagram d = Diagram::build(closed_two_braid(static_cast<int>(state.range(0))));
  const Cocycle theta = fixtures::torus_link_cocycle();
  for (auto _ : state) benchmark::DoNotOptimize(phi(d, s, pt, theta));
}
BENCHMARK(BM_TorusLinkInvariant)->Arg(2)->Arg(6)->Arg(12);
BENCHMARK_MAIN();
