#include <benchmark/benchmark.h>

#include <random>

#include "curvegrp/braid.hpp"
#include "curvegrp/finite_group.hpp"
#include "curvegrp/presentation.hpp"
#include "curvegrp/quotient.hpp"
#include "curvegrp/smith.hpp"
#include "curvegrp/zvk.hpp"

using namespace curvegrp;

static void BM_HomCountKkOntoGk(benchmark::State& state) {
  const int k = static_cast<int>(state.range(0));
  const auto p = k_group(k);
  const auto g = gk(k);
  for (auto _ : state) benchmark::DoNotOptimize(count_homomorphisms(p, g));
}
BENCHMARK(BM_HomCountKkOntoGk)->DenseRange(3, 5);

static void BM_DihedralCoverTest(benchmark::State& state) {
  const auto p = k_group(2);
  const std::vector<std::string> lines{"l"};
  for (auto _ : state) benchmark::DoNotOptimize(dihedral_cover_test(p, lines, "x", static_cast<int>(state.range(0))));
}
BENCHMARK(BM_DihedralCoverTest)->Arg(3)->Arg(8)->Arg(32);

static void BM_SmithNormalForm(benchmark::State& state) {
  const auto n = static_cast<std::size_t>(state.range(0));
  std::mt19937_64 rng(1);
  std::uniform_int_distribution<int> entry(-20, 20);
  IntMatrix m(n, n);
  for (std::size_t r = 0; r < n; ++r)
    for (std::size_t c = 0; c < n; ++c) m(r, c) = entry(rng);
  for (auto _ : state) benchmark::DoNotOptimize(smith_normal_form(m));
}
BENCHMARK(BM_SmithNormalForm)->Arg(4)->Arg(6)->Arg(8);

static void BM_ArtinAction(benchmark::State& state) {
  const int n = 6;
  const auto names = default_strand_names(n);
  std::mt19937_64 rng(2);
  std::vector<BraidLetter> letters;
  for (int i = 0; i < state.range(0); ++i)
    letters.push_back({1 + static_cast<int>(rng() % (n - 1)), rng() % 2 ? 1 : -1});
  const BraidWord b(n, letters);
  const Word w = Word::parse("x1 x3^-1 x6 x2 x5^2");
  for (auto _ : state) benchmark::DoNotOptimize(artin_act(b, w, names));
}
BENCHMARK(BM_ArtinAction)->Arg(8)->Arg(32);

static void BM_NodalCubicPipeline(benchmark::State& state) {
  for (auto _ : state) benchmark::DoNotOptimize(nodal_cubic_pipeline());
}
BENCHMARK(BM_NodalCubicPipeline);

static void BM_TietzeLongForm(benchmark::State& state) {
  const auto p = k_group_long(static_cast<int>(state.range(0)));
  for (auto _ : state) benchmark::DoNotOptimize(tietze_simplify(p));
}
BENCHMARK(BM_TietzeLongForm)->DenseRange(2, 6, 2);
BENCHMARK_MAIN();
